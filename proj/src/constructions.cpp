#include "hombra/constructions.hpp"

#include <algorithm>
#include <array>

#include "hombra/errors.hpp"

namespace hombra {

namespace {

void fail(const std::string& what) { throw HypothesisFailed(what); }

std::string first_failure(const AxiomReport& r) {
  for (const auto& e : r.entries) {
    if (e.verdict == Verdict::Fail) return e.name;
  }
  return {};
}

LinMap mul_from_table(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  LinMap mul(n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul(table[a][b], a * n + b) = 1;
  }
  return mul;
}

}  // namespace

std::size_t FiniteGroup::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b) {
    if (table[a][b] == identity) return b;
  }
  fail("element " + std::to_string(a) + " has no inverse");
  return 0;
}

void FiniteGroup::validate() const {
  const std::size_t n = order();
  if (n == 0 || identity >= n) fail("empty group or identity out of range");
  for (const auto& row : table) {
    if (row.size() != n) fail("multiplication table is not square");
    for (const auto x : row) {
      if (x >= n) fail("table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a][identity] != a || table[identity][a] != a) fail("identity is not neutral");
    (void)inverse(a);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) fail("table is not associative");
      }
    }
  }
}

bool FiniteGroup::is_homomorphism(const std::vector<std::size_t>& phi) const {
  const std::size_t n = order();
  if (phi.size() != n) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (phi[a] >= n) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (phi[table[a][b]] != table[phi[a]][phi[b]]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_automorphism(const std::vector<std::size_t>& phi) const {
  if (!is_homomorphism(phi)) return false;
  std::vector<std::size_t> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) fail("cyclic group of order 0");
  FiniteGroup g;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    g.names.push_back(a == 0 ? "1" : (a == 1 ? "t" : "t" + std::to_string(a)));
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  }
  return g;
}

FiniteGroup symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  const std::size_t n = perms.size();
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    g.names.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
    for (std::size_t b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  FiniteGroup out;
  out.identity = g.identity * m + h.identity;
  out.table.assign(g.order() * m, std::vector<std::size_t>(g.order() * m));
  for (std::size_t a = 0; a < out.order(); ++a) {
    out.names.push_back("(" + g.names[a / m] + "," + h.names[a % m] + ")");
    for (std::size_t b = 0; b < out.order(); ++b) {
      out.table[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
    }
  }
  return out;
}

LinMap element_map(std::size_t n, const std::vector<std::size_t>& phi) {
  if (phi.size() != n) throw DimensionMismatch("element map has the wrong length");
  LinMap f(n, n);
  for (std::size_t a = 0; a < n; ++a) f(phi[a], a) = 1;
  return f;
}

HomHopfCandidate group_algebra(const FiniteGroup& g) {
  g.validate();
  const std::size_t n = g.order();
  HomHopfCandidate h;
  HomAlgebra& alg = h.bialgebra.algebra;
  HomCoalgebra& co = h.bialgebra.coalgebra;
  alg.dim = co.dim = n;
  alg.mul = mul_from_table(g.table);
  alg.unit = Vec::basis(n, g.identity);
  alg.alpha = LinMap::identity(n);
  co.comul = LinMap(n * n, n);
  co.counit = LinMap(1, n);
  for (std::size_t a = 0; a < n; ++a) {
    co.comul(a * n + a, a) = 1;
    co.counit(0, a) = 1;
  }
  co.beta = LinMap::identity(n);
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) inv[a] = g.inverse(a);
  h.antipode = element_map(n, inv);
  return h;
}

HomHopfCandidate function_algebra(const FiniteGroup& g) {
  g.validate();
  const std::size_t n = g.order();
  HomHopfCandidate h;
  HomAlgebra& alg = h.bialgebra.algebra;
  HomCoalgebra& co = h.bialgebra.coalgebra;
  alg.dim = co.dim = n;
  alg.mul = LinMap(n, n * n);
  alg.unit = Vec(n);
  for (std::size_t a = 0; a < n; ++a) {
    alg.mul(a, a * n + a) = 1;
    alg.unit[a] = 1;
  }
  alg.alpha = LinMap::identity(n);
  co.comul = LinMap(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) co.comul(a * n + b, g.mul(a, b)) = 1;
  }
  co.counit = LinMap(1, n);
  co.counit(0, g.identity) = 1;
  co.beta = LinMap::identity(n);
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) inv[a] = g.inverse(a);
  h.antipode = element_map(n, inv);
  return h;
}

LinMap function_algebra_map(const FiniteGroup& g, const std::vector<std::size_t>& phi) {
  if (!g.is_homomorphism(phi)) fail("not a group endomorphism");
  const std::size_t n = g.order();
  LinMap f(n, n);
  // delta_x |-> sum of delta_h over phi(h) = x
  for (std::size_t h = 0; h < n; ++h) f(h, phi[h]) = 1;
  return f;
}

void require_classical(const HomBialgebra& b) {
  b.validate();
  const LinMap id = LinMap::identity(b.dim());
  if (!(b.algebra.alpha == id) || !(b.coalgebra.beta == id)) fail("twisting maps are not the identity");
  const AxiomReport r = check_axioms(b);
  if (!r.all_pass()) fail("not a bialgebra: " + first_failure(r) + " fails");
}

HomBialgebra yau_twist(const HomBialgebra& b, const LinMap& phi) {
  require_classical(b);
  const AxiomReport morphism = is_hom_bialgebra_morphism(phi, b, b);
  if (!morphism.all_pass()) fail("not a bialgebra endomorphism: " + first_failure(morphism) + " fails");
  HomBialgebra out = b;
  out.algebra.mul = compose(phi, b.algebra.mul);
  out.algebra.alpha = phi;
  out.coalgebra.comul = compose(b.coalgebra.comul, phi);
  out.coalgebra.beta = phi;
  return out;
}

HomHopfCandidate yau_twist(const HomHopfCandidate& h, const LinMap& phi) {
  h.validate();
  return {yau_twist(h.bialgebra, phi), h.antipode};
}

HomHopfCandidate tensor_hopf(const HomHopfCandidate& h, const HomHopfCandidate& k) {
  h.validate();
  k.validate();
  if (h.bialgebra.algebra.truncation || k.bialgebra.algebra.truncation) {
    fail("tensor products of truncated structures are not supported");
  }
  const std::size_t n1 = h.dim();
  const std::size_t n2 = k.dim();
  const std::size_t n = n1 * n2;
  const AlgebraOps a1(h.bialgebra.algebra), a2(k.bialgebra.algebra);
  const CoalgebraOps c1(h.bialgebra.coalgebra), c2(k.bialgebra.coalgebra);

  HomHopfCandidate out;
  HomAlgebra& alg = out.bialgebra.algebra;
  HomCoalgebra& co = out.bialgebra.coalgebra;
  alg.dim = co.dim = n;
  alg.mul = LinMap(n, n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const SparseVec p = tensor(a1.product_basis(x / n2, y / n2), a2.product_basis(x % n2, y % n2), n2);
      for (const auto& [i, v] : p) alg.mul(i, x * n + y) = v;
    }
  }
  alg.unit = tensor(h.bialgebra.algebra.unit, k.bialgebra.algebra.unit);
  alg.alpha = kron(h.bialgebra.algebra.alpha, k.bialgebra.algebra.alpha);

  co.comul = LinMap(n * n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& [p, u] : c1.coproduct_basis(x / n2)) {
      for (const auto& [q, v] : c2.coproduct_basis(x % n2)) {
        const std::size_t left = (p / n1) * n2 + q / n2;
        const std::size_t right = (p % n1) * n2 + q % n2;
        co.comul(left * n + right, x) += u * v;
      }
    }
  }
  co.counit = kron(h.bialgebra.coalgebra.counit, k.bialgebra.coalgebra.counit);
  co.beta = kron(h.bialgebra.coalgebra.beta, k.bialgebra.coalgebra.beta);
  out.antipode = kron(h.antipode, k.antipode);
  return out;
}

HomGroup make_hom_group(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
                        std::vector<std::size_t> alpha, std::size_t unit, std::vector<std::size_t> inv) {
  const std::size_t n = table.size();
  if (n == 0) fail("empty Hom-group");
  if (alpha.size() != n || inv.size() != n || unit >= n) fail("Hom-group data have inconsistent sizes");
  for (const auto& row : table) {
    if (row.size() != n) fail("multiplication table is not square");
    for (const auto x : row) {
      if (x >= n) fail("table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (alpha[a] >= n || inv[a] >= n) fail("alpha or inverse out of range");
  }
  if (names.empty()) {
    for (std::size_t a = 0; a < n; ++a) names.push_back("g" + std::to_string(a));
  }
  if (names.size() != n) fail("wrong number of element names");

  const auto& t = table;
  if (alpha[unit] != unit) fail("alpha(1) != 1");
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a][unit] != alpha[a] || t[unit][a] != alpha[a]) fail("a1 = 1a = alpha(a) fails at " + names[a]);
    if (alpha[inv[a]] != inv[alpha[a]]) fail("alpha(inv g) != inv(alpha g) at " + names[a]);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[alpha[a]][t[b][c]] != t[t[a][b]][alpha[c]]) {
          fail("Hom-associativity fails at (" + names[a] + "," + names[b] + "," + names[c] + ")");
        }
      }
    }
  }

  HomGroup g;
  g.index.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t left = t[a][inv[a]];
    std::size_t right = t[inv[a]][a];
    // alpha(1) = 1, so an orbit that reaches 1 does so within n steps
    unsigned k = 0;
    while ((left != unit || right != unit) && k <= n) {
      left = alpha[left];
      right = alpha[right];
      ++k;
    }
    if (left != unit || right != unit) fail(names[a] + " is not relatively invertible");
    g.index[a] = k;
  }
  g.alpha_multiplicative = true;
  for (std::size_t a = 0; a < n && g.alpha_multiplicative; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (alpha[t[a][b]] != t[alpha[a]][alpha[b]]) {
        g.alpha_multiplicative = false;
        break;
      }
    }
  }
  g.names = std::move(names);
  g.table = std::move(table);
  g.alpha = std::move(alpha);
  g.unit = unit;
  g.inv = std::move(inv);
  return g;
}

HomGroup twist_group(const FiniteGroup& g, const std::vector<std::size_t>& phi) {
  g.validate();
  if (!g.is_automorphism(phi)) fail("twist is not a group automorphism");
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv[a] = g.inverse(a);
    for (std::size_t b = 0; b < n; ++b) table[a][b] = phi[g.mul(a, b)];
  }
  return make_hom_group(g.names, std::move(table), phi, g.identity, std::move(inv));
}

HomHopfCandidate hom_group_algebra(const HomGroup& g, bool alpha_comul) {
  // re-validate: the struct may have been assembled by hand
  const HomGroup checked = make_hom_group(g.names, g.table, g.alpha, g.unit, g.inv);
  const std::size_t n = checked.order();
  HomHopfCandidate h;
  HomAlgebra& alg = h.bialgebra.algebra;
  HomCoalgebra& co = h.bialgebra.coalgebra;
  alg.dim = co.dim = n;
  alg.mul = mul_from_table(checked.table);
  alg.unit = Vec::basis(n, checked.unit);
  alg.alpha = element_map(n, checked.alpha);
  co.comul = LinMap(n * n, n);
  co.counit = LinMap(1, n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t img = alpha_comul ? checked.alpha[a] : a;
    co.comul(img * n + img, a) = 1;
    co.counit(0, a) = 1;
  }
  co.beta = alpha_comul ? alg.alpha : LinMap::identity(n);
  h.antipode = element_map(n, checked.inv);
  return h;
}

}  // namespace hombra
