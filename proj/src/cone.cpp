#include "signstab/cone.hpp"

#include <map>

#include "signstab/error.hpp"

namespace signstab {

void SignCone::add(std::vector<Rational> f, Relation rel) {
  if (f.size() != dim) throw DimensionError("functional length differs from cone dimension");
  constraints.push_back({std::move(f), rel});
}

void SignCone::add_signed(std::vector<Rational> f, Sign s) {
  if (s == Sign::zero) throw Error("NonStrictSign", "add_signed needs a strict sign");
  if (s == Sign::minus)
    for (auto& v : f) v = -v;
  add(std::move(f), Relation::greater);
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * x[i];
  return s;
}

// a.x >= c
struct Row {
  std::vector<Rational> a;
  Rational c;
};

// Strict rows become >= 1 (valid because the cone is homogeneous) and
// equations become two opposite inequalities.
std::vector<Row> to_rows(const SignCone& cone) {
  std::vector<Row> rows;
  for (const auto& con : cone.constraints) {
    switch (con.relation) {
      case Relation::greater:
        rows.push_back({con.functional, Rational(1)});
        break;
      case Relation::greater_equal:
        rows.push_back({con.functional, Rational(0)});
        break;
      case Relation::equal: {
        rows.push_back({con.functional, Rational(0)});
        std::vector<Rational> neg = con.functional;
        for (auto& v : neg) v = -v;
        rows.push_back({std::move(neg), Rational(0)});
        break;
      }
    }
  }
  return rows;
}

// Scales a row to primitive integer coefficients. Returns false when the row
// has no variables left.
bool normalize(Row& row) {
  Integer den(1);
  for (const auto& v : row.a)
    if (v != 0) den = lcm(den, Integer(v.get_den()));
  Integer g(0);
  for (const auto& v : row.a)
    if (v != 0) g = gcd(g, Integer(v * den));
  if (g == 0) return false;
  const Rational scale(den, g);
  for (auto& v : row.a) v *= scale;
  row.c *= scale;
  return true;
}

// Adds rows to a deduplicated system; the tightest right-hand side wins.
// Returns false when a row without variables is violated.
bool insert(std::map<std::vector<Rational>, Rational>& system, Row row) {
  if (!normalize(row)) return row.c <= 0;
  auto [it, inserted] = system.emplace(row.a, row.c);
  if (!inserted && it->second < row.c) it->second = row.c;
  return true;
}

}  // namespace

bool contains(const SignCone& cone, const std::vector<Rational>& x) {
  if (x.size() != cone.dim) return false;
  for (const auto& con : cone.constraints) {
    const int s = sgn(dot(con.functional, x));
    switch (con.relation) {
      case Relation::greater:
        if (s <= 0) return false;
        break;
      case Relation::greater_equal:
        if (s < 0) return false;
        break;
      case Relation::equal:
        if (s != 0) return false;
        break;
    }
  }
  return true;
}

std::optional<std::optional<std::vector<Rational>>> fm_witness(const SignCone& cone,
                                                               std::size_t limit) {
  using System = std::map<std::vector<Rational>, Rational>;
  const std::size_t n = cone.dim;
  System system;
  for (auto& row : to_rows(cone)) {
    if (!insert(system, std::move(row))) return std::optional<std::vector<Rational>>{};
  }
  // stages[j] holds the system in variables 0..j before x_j is eliminated.
  std::vector<System> stages(n);
  for (std::size_t j = n; j-- > 0;) {
    stages[j] = system;
    System next;
    std::vector<const std::pair<const std::vector<Rational>, Rational>*> lower, upper;
    for (const auto& entry : system) {
      const int s = sgn(entry.first[j]);
      if (s > 0) {
        lower.push_back(&entry);
      } else if (s < 0) {
        upper.push_back(&entry);
      } else if (!insert(next, {entry.first, entry.second})) {
        return std::optional<std::vector<Rational>>{};
      }
    }
    if (next.size() + lower.size() * upper.size() > limit) return std::nullopt;
    for (const auto* lo : lower) {
      for (const auto* up : upper) {
        const Rational wl = -up->first[j];
        const Rational wu = lo->first[j];
        Row r{std::vector<Rational>(n), wl * lo->second + wu * up->second};
        for (std::size_t i = 0; i < n; ++i) r.a[i] = wl * lo->first[i] + wu * up->first[i];
        if (!insert(next, std::move(r))) return std::optional<std::vector<Rational>>{};
      }
    }
    system = std::move(next);
  }
  // Back substitution: any value in [max lower, min upper] works; take the
  // lower end (or 0 clipped by the upper end).
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<Rational> lo, up;
    for (const auto& [a, c] : stages[j]) {
      if (a[j] == 0) continue;
      Rational rest = c;
      for (std::size_t i = 0; i < j; ++i)
        if (a[i] != 0) rest -= a[i] * x[i];
      const Rational bound = rest / a[j];
      if (a[j] > 0) {
        if (!lo || *lo < bound) lo = bound;
      } else if (!up || bound < *up) {
        up = bound;
      }
    }
    if (lo) {
      x[j] = *lo;
    } else if (up && *up < 0) {
      x[j] = *up;
    }
  }
  return std::optional<std::vector<Rational>>(std::move(x));
}

std::optional<std::vector<Rational>> simplex_witness(const SignCone& cone) {
  const std::vector<Row> rows = to_rows(cone);
  const std::size_t n = cone.dim;
  const std::size_t m = rows.size();
  if (m == 0) return std::vector<Rational>(n, Rational(0));
  // Columns: p (n), q (n), surplus (m), artificial (m), rhs.
  const std::size_t art0 = 2 * n + m;
  const std::size_t cols = 2 * n + 2 * m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int flip = rows[i].c < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = flip * rows[i].a[j];
      t[i][n + j] = -flip * rows[i].a[j];
    }
    t[i][2 * n + i] = -flip;
    t[i][art0 + i] = 1;
    t[i][cols] = flip * rows[i].c;
    basis[i] = art0 + i;
  }
  // Phase I: minimize the sum of artificials, Bland's rule.
  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < cols && !enter; ++j) {
      Rational reduced(j >= art0 ? 1 : 0);
      for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= art0) reduced -= t[i][j];
      if (reduced < 0) enter = j;
    }
    if (!enter) break;
    const std::size_t e = *enter;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][e] <= 0) continue;
      const Rational ratio = t[i][cols] / t[i][e];
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded direction cannot occur in phase I
    const std::size_t l = *leave;
    const Rational pivot = t[l][e];
    for (auto& v : t[l]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == l || t[i][e] == 0) continue;
      const Rational f = t[i][e];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[l][j] != 0) t[i][j] -= f * t[l][j];
    }
    basis[l] = e;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= art0 && t[i][cols] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] += t[i][cols];
    else if (basis[i] < 2 * n) x[basis[i] - n] -= t[i][cols];
  }
  return x;
}

std::optional<std::vector<Rational>> cone_witness(const SignCone& cone) {
  if (cone.dim <= 8) {
    if (auto r = fm_witness(cone)) return *r;
  }
  return simplex_witness(cone);
}

}  // namespace signstab
