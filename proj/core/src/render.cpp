#include "floerlink/render.hpp"

#include <algorithm>
#include <sstream>

namespace floerlink {

namespace {

std::string var_name(int n, int i) {
  return n == 1 ? "t" : "t" + std::to_string(i + 1);
}

// doubled exponent -> "", "^2", "^-1", "^(1/2)", "^(-3/2)", ...
std::string exp_suffix(int e) {
  if (e == 2) return "";
  if (e % 2 == 0) return "^" + std::to_string(e / 2);
  return "^(" + std::to_string(e) + "/2)";
}

std::string pad(const std::string& s, size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

}  // namespace

std::string render_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending lexicographic exponent order
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int i = 0; i < p.n; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(p.n, i) + exp_suffix(e[i]);
    }
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mono;
    }
  }
  return os.str();
}

std::string render_values(const HModel& m, bool use_H, int box) {
  const int b = box;
  auto value = [&](const LatticePoint& s) {
    return use_H ? eval_H(m, s) : eval_h(m, s);
  };
  std::ostringstream os;

  if (m.n == 1) {
    std::vector<std::string> labels, cells;
    size_t w = 0;
    for (int s = -b; s <= b; ++s) {
      labels.push_back(std::to_string(s));
      cells.push_back(std::to_string(value({s})));
      w = std::max({w, labels.back().size(), cells.back().size()});
    }
    os << "  s:";
    for (const auto& l : labels) os << " " << pad(l, w);
    os << "\n  " << (use_H ? "H" : "h") << ":";
    for (const auto& c : cells) os << " " << pad(c, w);
    os << "\n";
    return os.str();
  }

  if (m.n == 2) {
    size_t w = 0;
    std::vector<std::vector<std::string>> rows;  // s2 = b down to -b
    for (int s2 = b; s2 >= -b; --s2) {
      rows.emplace_back();
      for (int s1 = -b; s1 <= b; ++s1) {
        rows.back().push_back(std::to_string(value({s1, s2})));
        w = std::max(w, rows.back().back().size());
      }
    }
    std::vector<std::string> col_labels;
    for (int s1 = -b; s1 <= b; ++s1) {
      col_labels.push_back(std::to_string(s1));
      w = std::max(w, col_labels.back().size());
    }
    const std::string corner = "s2\\s1";
    size_t lw = corner.size();
    for (int s2 = -b; s2 <= b; ++s2)
      lw = std::max(lw, std::to_string(s2).size());
    os << " " << pad(corner, lw);
    for (const auto& l : col_labels) os << "  " << pad(l, w);
    os << "\n";
    for (int s2 = b; s2 >= -b; --s2) {
      os << " " << pad(std::to_string(s2), lw);
      for (const auto& cell : rows[b - s2]) os << "  " << pad(cell, w);
      os << "\n";
    }
    return os.str();
  }

  // n >= 3: list nonzero values on the box
  LatticePoint s(m.n, -b);
  bool any = false;
  auto advance = [&]() {
    for (int i = 0; i < m.n; ++i) {
      if (++s[i] <= b) return true;
      s[i] = -b;
    }
    return false;
  };
  do {
    const long long v = value(s);
    if (v == 0) continue;
    any = true;
    os << "  (";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ") = " << v << "\n";
  } while (advance());
  if (!any) os << "  0 everywhere on the box\n";
  return os.str();
}

}  // namespace floerlink
