// Copyright 2025 The cliffchar authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffchar/dixon.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffchar {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p, p < 2^31.
// ---------------------------------------------------------------------------

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::logic_error("mod_inv of zero");
  return mod_pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p (coefficient index = power). Degrees stay below
// the class count, so the quadratic algorithms are plenty.
// ---------------------------------------------------------------------------

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return out;
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  std::uint64_t lead_inv = mod_inv(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = mod_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

Poly poly_derivative(const Poly& a, std::uint64_t p) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i) {
    out.push_back(a[i] * (i % p) % p);
  }
  trim(out);
  return out;
}

// Roots of a polynomial all of whose irreducible factors are linear.
// Cantor-Zassenhaus style splitting with a caller-provided RNG.
void poly_roots(const Poly& f, std::uint64_t p, std::uint64_t& rng_state,
                std::vector<std::uint64_t>* roots) {
  Poly g = f;
  trim(g);
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    // c0 + c1 x = 0
    roots->push_back((p - g[0] % p) % p * mod_inv(g[1], p) % p);
    return;
  }
  auto next_rand = [&rng_state, p]() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state % p;
  };
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::uint64_t a = next_rand();
    // h = gcd(g, (x+a)^((p-1)/2) - 1)
    Poly shifted{a, 1};
    Poly pow{1};
    std::uint64_t exp = (p - 1) / 2;
    Poly base = poly_mod(shifted, g, p);
    while (exp > 0) {
      if (exp & 1) pow = poly_mod(poly_mul(pow, base, p), g, p);
      base = poly_mod(poly_mul(base, base, p), g, p);
      exp >>= 1;
    }
    if (!pow.empty()) {
      pow[0] = (pow[0] + p - 1) % p;
    } else {
      pow = Poly{p - 1};
    }
    Poly h = poly_gcd(g, pow, p);
    if (h.size() > 1 && h.size() < g.size()) {
      poly_roots(h, p, rng_state, roots);
      // g / h by repeated division
      Poly quotient;
      {
        Poly rem = g;
        std::size_t qdeg = g.size() - h.size();
        quotient.assign(qdeg + 1, 0);
        std::uint64_t lead_inv = mod_inv(h.back(), p);
        while (rem.size() >= h.size() && !rem.empty()) {
          std::uint64_t c = rem.back() * lead_inv % p;
          std::size_t shift = rem.size() - h.size();
          quotient[shift] = c;
          for (std::size_t i = 0; i < h.size(); ++i) {
            rem[shift + i] = (rem[shift + i] + p - c * h[i] % p) % p;
          }
          trim(rem);
        }
        if (!rem.empty()) throw std::logic_error("poly_roots: division failed");
        trim(quotient);
      }
      poly_roots(quotient, p, rng_state, roots);
      return;
    }
  }
  throw std::runtime_error("dixon: eigenvalue splitting failed after retries");
}

// ---------------------------------------------------------------------------
// Dense matrices over F_p.
// ---------------------------------------------------------------------------

struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> a;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// Reduced row echelon form in place; returns pivot column list.
std::vector<std::size_t> rref(ModMatrix& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t c = 0; c < m.cols; ++c) {
      std::swap(m.at(row, c), m.at(pivot, c));
    }
    std::uint64_t inv = mod_inv(m.at(row, col), p);
    for (std::size_t c = 0; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv % p;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      std::uint64_t f = m.at(r, col);
      for (std::size_t c = 0; c < m.cols; ++c) {
        m.at(r, c) = (m.at(r, c) + p - f * m.at(row, c) % p) % p;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.rows = row;
  m.a.resize(row * m.cols);
  return pivots;
}

// Characteristic polynomial via Hessenberg reduction (divides only by
// nonzero pivots, valid over any field).
Poly char_poly(ModMatrix h, std::uint64_t p) {
  std::size_t n = h.rows;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && h.at(pivot, k - 1) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h.at(k, c), h.at(pivot, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, k), h.at(r, pivot));
    }
    std::uint64_t inv = mod_inv(h.at(k, k - 1), p);
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint64_t f = h.at(i, k - 1) * inv % p;
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        h.at(i, c) = (h.at(i, c) + p - f * h.at(k, c) % p) % p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        h.at(r, k) = (h.at(r, k) + f * h.at(r, i)) % p;
      }
    }
  }
  // p_0 = 1, p_k = (x - h_{kk}) p_{k-1} - sum_i h_{ik} (prod subdiag) p_{i-1}
  std::vector<Poly> ps(n + 1);
  ps[0] = Poly{1};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly term = poly_mul(ps[k - 1], Poly{(p - h.at(k - 1, k - 1) % p) % p, 1}, p);
    std::uint64_t subdiag = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      subdiag = subdiag * h.at(i, i - 1) % p;
      std::uint64_t coeff = h.at(i - 1, k - 1) * subdiag % p;
      if (coeff != 0) {
        const Poly& pi = ps[i - 1];
        if (term.size() < pi.size()) term.resize(pi.size(), 0);
        for (std::size_t j = 0; j < pi.size(); ++j) {
          term[j] = (term[j] + p - coeff * pi[j] % p) % p;
        }
      }
      if (subdiag == 0) break;
    }
    ps[k] = std::move(term);
  }
  return ps[n];
}

}  // namespace

std::vector<ClassFunction> dixon_irreducibles(const GroupEnumeration& group,
                                              const DixonBudget& budget,
                                              ExecPolicy policy) {
  const std::size_t r = group.num_classes();
  if (group.order() > budget.max_elements) {
    throw std::runtime_error("dixon: group order " +
                             std::to_string(group.order()) +
                             " exceeds the element budget for " + group.name());
  }
  if (r > budget.max_classes) {
    throw std::runtime_error("dixon: class count exceeds budget for " +
                             group.name());
  }

  // Prime choice: smallest p = 1 mod exponent with p > 2 sqrt(|G|).
  const std::uint64_t exponent = group.exponent();
  std::uint64_t p = 0;
  for (std::uint64_t candidate = exponent + 1;
       candidate <= budget.prime_search_bound; candidate += exponent) {
    if (candidate * candidate > 4 * group.order() && is_prime(candidate)) {
      p = candidate;
      break;
    }
  }
  if (p == 0) {
    throw std::runtime_error("dixon: prime search exhausted for " + group.name());
  }

  // z: a fixed element of order `exponent` in F_p.
  std::uint64_t z = 0;
  std::vector<std::uint64_t> exp_factors = prime_factors(exponent);
  for (std::uint64_t g = 2; g < p && z == 0; ++g) {
    std::uint64_t candidate = mod_pow(g, (p - 1) / exponent, p);
    bool full_order = candidate != 1 || exponent == 1;
    for (std::uint64_t q : exp_factors) {
      if (mod_pow(candidate, exponent / q, p) == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) z = candidate;
  }
  if (z == 0 && exponent == 1) z = 1;
  if (z == 0) throw std::logic_error("dixon: no element of full order mod p");

  // Class multiplication matrices B_i (j, k) = a_{ijk}.
  std::vector<ModMatrix> bmats(r, ModMatrix(r, r));
  for (std::uint32_t k = 0; k < r; ++k) {
    std::vector<std::uint64_t> column = class_mult_column(group, k, policy);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        bmats[i].at(j, k) = column[i * r + j] % p;
      }
    }
  }

  // The identity class (not necessarily class 0: singleton classes sort by
  // packed representative) contributes only the identity matrix; skip it.
  const std::uint32_t id_class = group.class_of(group.identity());

  // Simultaneous eigenbasis: refine subspaces (rows = RREF bases of column
  // vectors) with each B_i, then with seeded random combinations.
  std::vector<ModMatrix> subspaces;
  {
    ModMatrix full(r, r);
    for (std::size_t i = 0; i < r; ++i) full.at(i, i) = 1;
    subspaces.push_back(full);
  }
  std::uint64_t rng_state = budget.seed | 1;

  auto refine_with = [&](const ModMatrix& b) {
    std::vector<ModMatrix> next;
    for (ModMatrix& v : subspaces) {
      std::size_t dim = v.rows;
      if (dim == 1) {
        next.push_back(std::move(v));
        continue;
      }
      // Restriction matrix: B * basis_row_t^T expressed over the basis.
      // Solve [basis^T | B v^T] simultaneously: build (r x (dim + dim))
      ModMatrix system(r, dim + dim);
      for (std::size_t row = 0; row < r; ++row) {
        for (std::size_t c = 0; c < dim; ++c) {
          system.at(row, c) = v.at(c, row);  // basis vectors as columns
        }
      }
      for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t row = 0; row < r; ++row) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) {
            acc = (acc + b.at(row, k) * v.at(c, k)) % p;
          }
          system.at(row, dim + c) = acc;
        }
      }
      std::vector<std::size_t> pivots = rref(system, p);
      // The first dim columns must all be pivots (basis is independent).
      ModMatrix action(dim, dim);
      for (std::size_t c = 0; c < dim; ++c) {
        if (c >= pivots.size() || pivots[c] != c) {
          throw std::logic_error("dixon: subspace basis degenerated");
        }
      }
      for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t c = 0; c < dim; ++c) {
          action.at(row, c) = system.at(row, dim + c);
        }
      }
      // Sanity: B v must lie inside span(v): rows beyond dim must vanish.
      for (std::size_t row = dim; row < system.rows; ++row) {
        for (std::size_t c = dim; c < system.cols; ++c) {
          if (system.at(row, c) != 0) {
            throw std::logic_error("dixon: subspace not invariant");
          }
        }
      }

      Poly cp = char_poly(action, p);
      // Squarefree part. A vanishing derivative means cp is a p-th power
      // (Frobenius); take the p-th root until the derivative is nonzero.
      Poly deriv = poly_derivative(cp, p);
      while (deriv.empty() && cp.size() > 1) {
        Poly root((cp.size() - 1) / p + 1, 0);
        for (std::size_t i = 0; i < root.size(); ++i) root[i] = cp[i * p];
        cp = std::move(root);
        deriv = poly_derivative(cp, p);
      }
      Poly common = poly_gcd(cp, deriv, p);
      if (common.size() > 1) {
        Poly sf;
        Poly rem = cp;
        std::uint64_t lead_inv = mod_inv(common.back(), p);
        sf.assign(cp.size() - common.size() + 1, 0);
        while (rem.size() >= common.size() && !rem.empty()) {
          std::uint64_t c2 = rem.back() * lead_inv % p;
          std::size_t shift = rem.size() - common.size();
          sf[shift] = c2;
          for (std::size_t i = 0; i < common.size(); ++i) {
            rem[shift + i] = (rem[shift + i] + p - c2 * common[i] % p) % p;
          }
          trim(rem);
        }
        trim(sf);
        cp = std::move(sf);
      }
      std::vector<std::uint64_t> eigenvalues;
      poly_roots(cp, p, rng_state, &eigenvalues);
      std::sort(eigenvalues.begin(), eigenvalues.end());
      if (eigenvalues.size() <= 1) {
        next.push_back(std::move(v));
        continue;
      }
      for (std::uint64_t lambda : eigenvalues) {
        // Nullspace of (action - lambda I) -> coefficients over v's basis.
        ModMatrix shifted = action;
        for (std::size_t d = 0; d < dim; ++d) {
          shifted.at(d, d) = (shifted.at(d, d) + p - lambda) % p;
        }
        std::vector<std::size_t> piv = rref(shifted, p);
        std::vector<bool> is_pivot(dim, false);
        for (std::size_t c : piv) is_pivot[c] = true;
        ModMatrix eigen(0, r);
        for (std::size_t free_col = 0; free_col < dim; ++free_col) {
          if (is_pivot[free_col]) continue;
          // Coefficient vector in the restricted coordinates.
          std::vector<std::uint64_t> coeff(dim, 0);
          coeff[free_col] = 1;
          for (std::size_t prow = 0; prow < piv.size(); ++prow) {
            coeff[piv[prow]] =
                (p - shifted.at(prow, free_col) % p) % p;
          }
          // Ambient vector.
          std::vector<std::uint64_t> ambient(r, 0);
          for (std::size_t c = 0; c < dim; ++c) {
            if (coeff[c] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) {
              ambient[k] = (ambient[k] + coeff[c] * v.at(c, k)) % p;
            }
          }
          eigen.rows += 1;
          eigen.a.insert(eigen.a.end(), ambient.begin(), ambient.end());
        }
        if (eigen.rows == 0) {
          throw std::logic_error("dixon: eigenvalue with empty eigenspace");
        }
        rref(eigen, p);
        next.push_back(std::move(eigen));
      }
    }
    subspaces = std::move(next);
  };

  auto all_split = [&]() {
    for (const ModMatrix& v : subspaces) {
      if (v.rows > 1) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < r && !all_split(); ++i) {
    if (i != id_class) refine_with(bmats[i]);
  }
  for (int attempt = 0; attempt < budget.max_random_splits && !all_split();
       ++attempt) {
    ModMatrix combo(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == id_class) continue;
      rng_state ^= rng_state << 13;
      rng_state ^= rng_state >> 7;
      rng_state ^= rng_state << 17;
      std::uint64_t c = rng_state % p;
      if (c == 0) continue;
      for (std::size_t idx = 0; idx < r * r; ++idx) {
        combo.a[idx] = (combo.a[idx] + c * bmats[i].a[idx]) % p;
      }
    }
    refine_with(combo);
  }
  if (!all_split()) {
    throw std::runtime_error("dixon: eigenspace splitting failed for " +
                             group.name());
  }
  if (subspaces.size() != r) {
    throw std::logic_error("dixon: wrong number of common eigenvectors");
  }

  // Degrees and mod-p character values.
  std::vector<std::uint32_t> inverse_class(r);
  for (std::uint32_t c = 0; c < r; ++c) inverse_class[c] = group.inverse_class(c);

  std::uint64_t sqrt_order = 0;
  while ((sqrt_order + 1) * (sqrt_order + 1) <= group.order()) ++sqrt_order;

  struct ModRow {
    std::uint64_t degree;
    std::vector<std::uint64_t> chi;  // chi(class) mod p
  };
  std::vector<ModRow> mod_rows;
  for (const ModMatrix& v : subspaces) {
    std::vector<std::uint64_t> omega(v.a.begin(), v.a.end());
    if (omega[id_class] == 0) {
      throw std::logic_error("dixon: eigenvector vanishes at the identity");
    }
    std::uint64_t scale = mod_inv(omega[id_class], p);
    for (auto& w : omega) w = w * scale % p;

    std::uint64_t s = 0;
    for (std::uint32_t c = 0; c < r; ++c) {
      std::uint64_t term = omega[c] * omega[inverse_class[c]] % p;
      s = (s + term * mod_inv(group.classes()[c].size % p, p)) % p;
    }
    std::uint64_t d2 = group.order() % p * mod_inv(s, p) % p;
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= sqrt_order; ++d) {
      if (d * d % p == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) {
      throw std::logic_error("dixon: degree recovery failed");
    }
    ModRow row;
    row.degree = degree;
    row.chi.resize(r);
    for (std::uint32_t c = 0; c < r; ++c) {
      row.chi[c] =
          degree % p * omega[c] % p * mod_inv(group.classes()[c].size % p, p) % p;
    }
    mod_rows.push_back(std::move(row));
  }

  // Lift to exact cyclotomic values through root-of-unity multiplicities.
  std::vector<ClassFunction> rows;
  for (const ModRow& row : mod_rows) {
    std::vector<Cyclotomic> values(r);
    for (std::uint32_t c = 0; c < r; ++c) {
      std::uint64_t m = group.classes()[c].element_order;
      std::uint64_t zm = mod_pow(z, exponent / m, p);        // order m
      std::uint64_t zm_inv = mod_inv(zm, p);
      std::uint64_t m_inv = mod_inv(m % p, p);
      Cyclotomic value;
      std::uint64_t total = 0;
      for (std::uint64_t s = 0; s < m; ++s) {
        std::uint64_t mult = 0;
        for (std::uint64_t l = 0; l < m; ++l) {
          std::uint64_t chi_l = row.chi[group.class_power(c, l)];
          mult = (mult + chi_l * mod_pow(zm_inv, s * l % m, p)) % p;
        }
        mult = mult * m_inv % p;
        if (mult > row.degree) {
          throw std::logic_error("dixon: eigenvalue multiplicity out of range");
        }
        total += mult;
        if (mult > 0) {
          value += Cyclotomic::zeta_power(std::uint32_t(m), s)
                       .scaled(Rational(std::int64_t(mult)));
        }
      }
      if (total != row.degree) {
        throw std::logic_error("dixon: multiplicities do not sum to degree");
      }
      values[c] = value;
    }
    rows.push_back(make_class_function(group, std::move(values)));
  }

  // Exact verification: orthonormal rows, orthogonal columns.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      Cyclotomic ip = inner_product(rows[i], rows[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0)) {
        throw std::logic_error("dixon: row orthonormality failed for " +
                               group.name());
      }
    }
  }
  for (std::uint32_t c = 0; c < r; ++c) {
    for (std::uint32_t c2 = 0; c2 < r; ++c2) {
      Cyclotomic sum;
      for (const ClassFunction& row : rows) {
        sum += row.values[c] * row.values[c2].conj();
      }
      Cyclotomic expected =
          c == c2 ? Cyclotomic(Rational(BigInt(group.classes()[c].centralizer_order), 1))
                  : Cyclotomic(0);
      if (sum != expected) {
        throw std::logic_error("dixon: column orthogonality failed for " +
                               group.name());
      }
    }
  }

  std::sort(rows.begin(), rows.end(),
            [&](const ClassFunction& a, const ClassFunction& b) {
              const Cyclotomic& da = a.values[id_class];
              const Cyclotomic& db = b.values[id_class];
              if (!(da == db)) {
                return da.rational_value() < db.rational_value();
              }
              for (std::uint32_t c = 0; c < r; ++c) {
                int cmp = Cyclotomic::compare(a.values[c], b.values[c]);
                if (cmp != 0) return cmp < 0;
              }
              return false;
            });
  return rows;
}

}  // namespace cliffchar
