#include "floerlink/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace floerlink {

int SublinkId::arity() const { return std::popcount(mask); }

long long HPrimeTable::at(const LatticePoint& s) const {
  auto it = support.find(s);
  return it == support.end() ? 0 : it->second;
}

bool HPrimeTable::is_symmetric() const {
  for (const auto& [s, v] : support) {
    LatticePoint m(s.size());
    for (size_t i = 0; i < s.size(); ++i) m[i] = -s[i];
    if (at(m) != v) return false;
  }
  return true;
}

int HPrimeTable::support_radius() const {
  int r = 0;
  for (const auto& [s, v] : support)
    for (int c : s) r = std::max(r, std::abs(c));
  return r;
}

long long HPrimeTable::sum() const {
  long long t = 0;
  for (const auto& [s, v] : support) t += v;
  return t;
}

const HPrimeTable& HModel::table(SublinkId id) const {
  auto it = tables.find(id.mask);
  if (it == tables.end())
    throw Error(Errc::MissingSublink, "no table for sublink mask " + std::to_string(id.mask));
  return it->second;
}

int HModel::support_radius() const {
  int r = 0;
  for (const auto& [mask, t] : tables) r = std::max(r, t.support_radius());
  return r;
}

long long unknot_H(long long s) { return s < 0 ? -s : 0; }

namespace {

void check_point(const HModel& m, const LatticePoint& s) {
  if (static_cast<int>(s.size()) != m.n)
    throw Error(Errc::DimensionMismatch, "lattice point arity");
}

LatticePoint project(const LatticePoint& s, unsigned mask) {
  LatticePoint r;
  for (size_t i = 0; i < s.size(); ++i)
    if ((mask >> i) & 1u) r.push_back(s[i]);
  return r;
}

}  // namespace

long long eval_H(const HModel& m, const LatticePoint& s) {
  check_point(m, s);
  long long v = 0;
  for (const auto& [mask, t] : m.tables) v += t.at(project(s, mask));
  for (int c : s) v += unknot_H(c);
  return v;
}

long long eval_h(const HModel& m, const LatticePoint& s) {
  check_point(m, s);
  long long v = 0;
  for (const auto& [mask, t] : m.tables) v += t.at(project(s, mask));
  return v;
}

long long eval_h_prime(const HModel& m, const LatticePoint& s) {
  check_point(m, s);
  return m.table(SublinkId::full(m.n)).at(s);
}

HModel restrict_sublink(const HModel& m, SublinkId I) {
  if (I.mask == 0) throw Error(Errc::EmptySublink, "cannot restrict to the empty sublink");
  HModel r;
  r.n = I.arity();
  r.provenance = m.provenance;
  for (const auto& [mask, t] : m.tables) {
    if ((mask & I.mask) != mask) continue;
    // reindex: position of each set bit of `mask` within the bits of I.mask
    unsigned sub = 0;
    int j = 0;
    for (int i = 0; i < m.n; ++i) {
      if (!((I.mask >> i) & 1u)) continue;
      if ((mask >> i) & 1u) sub |= 1u << j;
      ++j;
    }
    r.tables[sub] = t;
  }
  return r;
}

std::vector<Violation> validate(const HModel& m, int box_radius) {
  std::vector<Violation> out;
  const int n = m.n;
  const int r = box_radius;
  LatticePoint s(n, -r);
  auto advance = [&]() {
    for (int i = 0; i < n; ++i) {
      if (++s[i] <= r) return true;
      s[i] = -r;
    }
    return false;
  };
  do {
    const long long H = eval_H(m, s);
    const long long h = eval_h(m, s);
    if (H < 0)
      out.push_back({"H-nonnegative", s, "H = " + std::to_string(H)});
    if (h < 0)
      out.push_back({"h-nonnegative", s, "h = " + std::to_string(h)});
    LatticePoint ms(n);
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
      ms[i] = -s[i];
      sum += s[i];
    }
    if (eval_H(m, ms) != H + sum)
      out.push_back({"H-symmetry", s, "H(-s) != H(s) + sum(s)"});
    if (eval_h(m, ms) != h)
      out.push_back({"h-symmetry", s, "h(-s) != h(s)"});
    for (int i = 0; i < n; ++i) {
      LatticePoint t = s;
      t[i] -= 1;
      const long long step = eval_H(m, t) - H;
      if (step != 0 && step != 1)
        out.push_back({"H-step", s, "H(s-e" + std::to_string(i + 1) + ") - H(s) = " +
                                        std::to_string(step)});
      const long long hstep = eval_h(m, t) - h;
      if (s[i] > 0 ? hstep < 0 : hstep > 0)
        out.push_back({"h-monotone", s, "h not non-decreasing towards the origin in e" +
                                            std::to_string(i + 1)});
    }
  } while (advance());
  return out;
}

long long total_h(const HModel& m) {
  const unsigned full = SublinkId::full(m.n).mask;
  for (const auto& [mask, t] : m.tables)
    if (mask != full && !t.support.empty())
      throw Error(Errc::ValidationFailed,
                  "sum of h diverges: proper sublink has nonempty h' table");
  return m.table(SublinkId::full(m.n)).sum();
}

}  // namespace floerlink
