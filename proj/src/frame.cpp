#include "mtp/frame.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace mtp {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Join of everything strictly below j differs from j exactly when j has one lower cover.
bool join_irreducible_fast(const Frame& l, int j) {
  if (j == l.bottom()) return false;
  int acc = l.bottom();
  for (int a = 0; a < l.size(); ++a)
    if (l.lattice().poset().less(a, j)) acc = l.join(acc, a);
  return acc != j;
}

int meet_of_strictly_above(const Frame& l, int p) {
  int acc = l.top();
  for (int a = 0; a < l.size(); ++a)
    if (l.lattice().poset().less(p, a)) acc = l.meet(acc, a);
  return acc;
}

bool has_upper_cover(const Frame& l, int p) {
  for (int b = 0; b < l.size(); ++b) {
    if (!l.lattice().poset().less(p, b)) continue;
    bool between = false;
    for (int c = 0; c < l.size() && !between; ++c)
      between = l.lattice().poset().less(p, c) && l.lattice().poset().less(c, b);
    if (!between) return true;
  }
  return false;
}

}  // namespace

Frame::Frame(Lattice l) : lattice_(std::move(l)) {
  if (auto w = distributivity_witness(lattice_)) {
    throw Error(ErrorKind::NotDistributive, "triple " + std::to_string((*w)[0]) + "," +
                                                std::to_string((*w)[1]) + "," + std::to_string((*w)[2]));
  }
}

Frame Frame::from_sets(std::span<const Mask> sets) { return Frame(Lattice::of_closed_family(sets), Trusted{}); }

int SetFrame::index_of(Mask s) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), s);
  if (it == sets.end() || *it != s) throw Error(ErrorKind::InvalidInput, show(s) + " is not in the frame");
  return static_cast<int>(it - sets.begin());
}

SetFrame set_frame(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  FrameRef f = share(Frame::from_sets(sets));
  return {std::move(f), std::move(sets)};
}

Verdict is_frame_morphism(const FrameMorphism& f) {
  const Frame& l = *f.source;
  const Frame& m = *f.target;
  if (static_cast<int>(f.map.size()) != l.size()) return Verdict::fail("table size differs from source");
  for (int v : f.map)
    if (v < 0 || v >= m.size()) return Verdict::fail("value " + std::to_string(v) + " out of range");
  if (f.map[l.bottom()] != m.bottom()) return Verdict::fail("bottom " + std::to_string(l.bottom()) + " not preserved");
  if (f.map[l.top()] != m.top()) return Verdict::fail("top " + std::to_string(l.top()) + " not preserved");
  for (int a = 0; a < l.size(); ++a) {
    for (int b = a + 1; b < l.size(); ++b) {
      if (f.map[l.meet(a, b)] != m.meet(f.map[a], f.map[b])) return Verdict::fail("meet of " + pair_str(a, b));
      if (f.map[l.join(a, b)] != m.join(f.map[a], f.map[b])) return Verdict::fail("join of " + pair_str(a, b));
    }
  }
  return Verdict::pass();
}

FrameMorphism identity_morphism(const FrameRef& l) {
  FrameMorphism f{l, l, std::vector<int>(l->size())};
  for (int a = 0; a < l->size(); ++a) f.map[a] = a;
  return f;
}

FrameMorphism compose(const FrameMorphism& g, const FrameMorphism& f) {
  if (!(*f.target == *g.source)) throw Error(ErrorKind::SourceTargetMismatch, "compose: frames differ");
  FrameMorphism h{f.source, g.target, std::vector<int>(f.map.size())};
  for (std::size_t a = 0; a < f.map.size(); ++a) h.map[a] = g.map[f.map[a]];
  return h;
}

std::vector<FrameMorphism> enumerate_frame_morphisms(const FrameRef& source, const FrameRef& target,
                                                     std::size_t limit) {
  const Frame& l = *source;
  const Frame& m = *target;
  std::vector<int> irr;
  for (int a = 0; a < l.size(); ++a)
    if (join_irreducible_fast(l, a)) irr.push_back(a);
  auto below = [&](int a) {
    int c = 0;
    for (int b = 0; b < l.size(); ++b) c += l.leq(b, a);
    return c;
  };
  std::stable_sort(irr.begin(), irr.end(), [&](int a, int b) { return below(a) < below(b); });

  std::vector<FrameMorphism> out;
  std::vector<int> value(irr.size(), -1);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == irr.size()) {
      FrameMorphism f{source, target, std::vector<int>(l.size(), m.bottom())};
      for (int a = 0; a < l.size(); ++a)
        for (std::size_t i = 0; i < irr.size(); ++i)
          if (l.leq(irr[i], a)) f.map[a] = m.join(f.map[a], value[i]);
      if (is_frame_morphism(f)) {
        if (out.size() >= limit) throw Error(ErrorKind::TooLarge, "frame morphism enumeration");
        out.push_back(std::move(f));
      }
      return;
    }
    for (int v = 0; v < m.size(); ++v) {
      bool monotone = true;
      for (std::size_t i = 0; i < k && monotone; ++i)
        if (l.leq(irr[i], irr[k])) monotone = m.leq(value[i], v);
      if (!monotone) continue;
      value[k] = v;
      walk(k + 1);
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const FrameMorphism& a, const FrameMorphism& b) { return a.map < b.map; });
  return out;
}

int heyting_implication(const Frame& l, int u, int v) {
  int acc = l.bottom();
  for (int w = 0; w < l.size(); ++w)
    if (l.leq(l.meet(w, u), v)) acc = l.join(acc, w);
  return acc;
}

int co_implication(const Lattice& l, int c, int d) {
  int acc = l.top();
  for (int w = 0; w < l.size(); ++w)
    if (l.leq(d, l.join(c, w))) acc = l.meet(acc, w);
  return acc;
}

bool is_prime(const Frame& l, int p) {
  if (p == l.top()) return false;
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (l.leq(l.meet(a, b), p) && !l.leq(a, p) && !l.leq(b, p)) return false;
  return true;
}

std::vector<int> prime_elements(const Frame& l) {
  // In a finite distributive lattice the primes are the meet-irreducibles.
  std::vector<int> out;
  for (int p = 0; p < l.size(); ++p)
    if (p != l.top() && meet_of_strictly_above(l, p) != p) out.push_back(p);
  return out;
}

FramePoint point_of_prime(const Frame& l, int p) {
  FramePoint pt;
  for (int a = 0; a < l.size(); ++a)
    if (!l.leq(a, p)) pt.filter.push_back(a);
  return pt;
}

int prime_of_point(const Frame& l, const FramePoint& point) {
  int acc = l.bottom();
  for (int a = 0; a < l.size(); ++a)
    if (!std::binary_search(point.filter.begin(), point.filter.end(), a)) acc = l.join(acc, a);
  return acc;
}

bool is_completely_prime_filter(const Frame& l, std::span<const int> elems) {
  std::vector<char> in(l.size(), 0);
  for (int a : elems) {
    if (a < 0 || a >= l.size()) return false;
    in[a] = 1;
  }
  if (!in[l.top()] || in[l.bottom()]) return false;
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      if (in[a] && l.leq(a, b) && !in[b]) return false;
      if (in[a] && in[b] && !in[l.meet(a, b)]) return false;
      if (in[l.join(a, b)] && !in[a] && !in[b]) return false;
    }
  }
  return true;
}

std::vector<FramePoint> completely_prime_filters_by_search(const Frame& l) {
  const int n = l.size();
  if (n > 24) throw Error(ErrorKind::TooLarge, "filter search above 24 elements");
  std::vector<FramePoint> out;
  std::vector<int> elems;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (!(s & bit(l.top())) || (s & bit(l.bottom()))) continue;
    elems = members(s);
    if (is_completely_prime_filter(l, elems)) out.push_back({elems});
  }
  return out;
}

int Spectrum::point_of(int prime) const {
  auto it = std::find(primes.begin(), primes.end(), prime);
  return it == primes.end() ? -1 : static_cast<int>(it - primes.begin());
}

namespace {

Spectrum spectrum_on(const Frame& l, std::vector<int> primes) {
  if (primes.size() > 64) throw Error(ErrorKind::TooLarge, "spectrum above 64 points");
  std::vector<Mask> sigma(l.size(), 0);
  for (int a = 0; a < l.size(); ++a)
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (!l.leq(a, primes[i])) sigma[a] |= bit(static_cast<int>(i));
  FinSpace space(static_cast<int>(primes.size()), sigma);
  return {std::move(space), std::move(primes), std::move(sigma)};
}

}  // namespace

Spectrum pt_space(const Frame& l) { return spectrum_on(l, prime_elements(l)); }

bool is_slicing_filter(const Frame& l, std::span<const int> elems) {
  if (!is_completely_prime_filter(l, elems)) return false;
  auto in = [&](int a) { return std::find(elems.begin(), elems.end(), a) != elems.end(); };
  for (auto [a, b] : covers(l.lattice().poset()))
    if (in(b) && !in(a)) return true;
  return false;
}

SlicingCharacterizations slicing_characterizations(const Frame& l) {
  SlicingCharacterizations s;
  for (int p : prime_elements(l)) {
    if (is_slicing_filter(l, point_of_prime(l, p).filter)) s.by_filter_definition.push_back(p);
    if (has_upper_cover(l, p)) s.by_covered_prime.push_back(p);
    if (meet_of_strictly_above(l, p) != p) s.by_meet_irreducible.push_back(p);
  }
  return s;
}

std::vector<int> slicing_primes(const Frame& l) {
  SlicingCharacterizations s = slicing_characterizations(l);
  if (!s.agree()) throw Error(ErrorKind::InternalInconsistency, "slicing characterizations disagree");
  return s.by_filter_definition;
}

std::vector<FramePoint> slicing_filters(const Frame& l) {
  std::vector<FramePoint> out;
  for (int p : slicing_primes(l)) out.push_back(point_of_prime(l, p));
  return out;
}

Spectrum ptD_space(const Frame& l) { return spectrum_on(l, slicing_primes(l)); }

int pulled_back_prime(const FrameMorphism& f, int q) {
  const Frame& l = *f.source;
  int acc = l.bottom();
  for (int a = 0; a < l.size(); ++a)
    if (f.target->leq(f.map[a], q)) acc = l.join(acc, a);
  return acc;
}

Verdict is_D_morphism_frame(const FrameMorphism& f) {
  if (auto v = is_frame_morphism(f); !v) throw Error(ErrorKind::NotFrameMorphism, v.witness);
  for (int q : slicing_primes(*f.target)) {
    std::vector<int> preimage;
    for (int a = 0; a < f.source->size(); ++a)
      if (!f.target->leq(f.map[a], q)) preimage.push_back(a);
    if (!is_slicing_filter(*f.source, preimage)) {
      return Verdict::fail("preimage of the filter of prime " + std::to_string(q) + " is not slicing");
    }
  }
  return Verdict::pass();
}

ContMap pt_map(const FrameMorphism& f, const Spectrum& pt_target, const Spectrum& pt_source) {
  ContMap g{share(pt_target.space), share(pt_source.space), std::vector<int>(pt_target.primes.size())};
  for (std::size_t i = 0; i < pt_target.primes.size(); ++i) {
    g.map[i] = pt_source.point_of(pulled_back_prime(f, pt_target.primes[i]));
    if (g.map[i] < 0) throw Error(ErrorKind::InternalInconsistency, "pulled back prime missing from spectrum");
  }
  return g;
}

}  // namespace mtp
