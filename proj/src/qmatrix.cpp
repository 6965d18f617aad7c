#include "hombra/qmatrix.hpp"

#include <algorithm>
#include <random>

#include "hombra/errors.hpp"

namespace hombra {

namespace {

constexpr std::string_view kLetters = "abcd";

std::size_t letter_index(char c) {
  const auto pos = kLetters.find(c);
  if (pos == std::string_view::npos) throw ParseError(std::string("not a generator: '") + c + "'");
  return pos;
}

QMonomial monomial_of_sorted(std::string_view word) {
  QMonomial m;
  for (const char c : word) ++m.exp[letter_index(c)];
  return m;
}

void add_term(std::map<std::string, Scalar>& terms, std::string word, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(word), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

QTensor tensor_of(const QPoly& x, const QPoly& y) {
  QTensor out;
  for (const auto& [m, u] : x) {
    for (const auto& [n, v] : y) out[{m, n}] += u * v;
  }
  return out;
}

void add_to(QTensor& acc, const QTensor& x, const Scalar& factor) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = acc.try_emplace(k, v * factor);
    if (!inserted) {
      it->second += v * factor;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

}  // namespace

void QParams::validate() const {
  if (q.is_zero()) throw HypothesisFailed("q must be nonzero");
  if (lambda.is_zero()) throw HypothesisFailed("lambda must be invertible");
}

std::string QMonomial::to_string() const {
  if (degree() == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (exp[i] == 0) continue;
    out += kLetters[i];
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out;
}

std::string QMonomial::word() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) out.append(exp[i], kLetters[i]);
  return out;
}

QPoly normal_form(std::string_view word, const QParams& p, RewriteStrategy strategy, std::uint64_t seed) {
  p.validate();
  for (const char c : word) letter_index(c);
  const Scalar q = p.q;
  const Scalar da_bc = -(q.inverse() - q);
  std::mt19937_64 rng(seed);

  std::map<std::string, Scalar> pending;
  add_term(pending, std::string(word), Scalar(1));
  QPoly out;
  while (!pending.empty()) {
    auto it = pending.begin();
    if (strategy == RewriteStrategy::Random) {
      std::advance(it, static_cast<long>(rng() % pending.size()));
    }
    const std::string w = it->first;
    const Scalar c = it->second;
    pending.erase(it);

    std::vector<std::size_t> descents;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) descents.push_back(i);
    }
    if (descents.empty()) {
      add_to(out, qpoly_from(monomial_of_sorted(w), c));
      continue;
    }
    std::size_t i = descents.front();
    if (strategy == RewriteStrategy::Rightmost) i = descents.back();
    if (strategy == RewriteStrategy::Random) i = descents[rng() % descents.size()];

    const std::string head = w.substr(0, i);
    const std::string tail = w.substr(i + 2);
    const std::string pair = w.substr(i, 2);
    if (pair == "cb") {
      add_term(pending, head + "bc" + tail, c);
    } else if (pair == "da") {
      add_term(pending, head + "ad" + tail, c);
      add_term(pending, head + "bc" + tail, c * da_bc);
    } else {
      // ba, ca, db, dc each pick up a factor q
      add_term(pending, head + pair[1] + pair[0] + tail, c * q);
    }
  }
  return out;
}

QPoly qpoly_from(const QMonomial& m, const Scalar& c) {
  QPoly out;
  if (!c.is_zero()) out.emplace(m, c);
  return out;
}

QPoly generator(char name) {
  QMonomial m;
  m.exp[letter_index(name)] = 1;
  return qpoly_from(m);
}

unsigned degree(const QPoly& x) {
  unsigned d = 0;
  for (const auto& [m, c] : x) d = std::max(d, m.degree());
  return d;
}

std::string to_string(const QPoly& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : x) {
    std::string coef = c.to_string();
    if (!out.empty()) {
      if (c.sign() < 0) {
        out += " - ";
        coef = (-c).to_string();
      } else {
        out += " + ";
      }
    }
    if (coef == "1" && m.degree() > 0) {
      out += m.to_string();
    } else if (coef == "-1" && m.degree() > 0) {
      out += "-" + m.to_string();
    } else {
      out += coef + (m.degree() > 0 ? "*" + m.to_string() : "");
    }
  }
  return out;
}

void add_to(QPoly& acc, const QPoly& x, const Scalar& factor) {
  for (const auto& [m, c] : x) {
    auto [it, inserted] = acc.try_emplace(m, c * factor);
    if (!inserted) {
      it->second += c * factor;
      if (it->second.is_zero()) acc.erase(it);
    } else if (it->second.is_zero()) {
      acc.erase(it);
    }
  }
}

QPoly classical_product(const QPoly& x, const QPoly& y, const QParams& p) {
  QPoly out;
  for (const auto& [m, u] : x) {
    for (const auto& [n, v] : y) add_to(out, normal_form(m.word() + n.word(), p), u * v);
  }
  return out;
}

QPoly multiply(const QPoly& x, const QPoly& y, const QParams& p, unsigned max_degree) {
  if (degree(x) + degree(y) > max_degree) {
    throw TruncationExceeded("product of degree " + std::to_string(degree(x) + degree(y)) + " exceeds the cut " +
                             std::to_string(max_degree));
  }
  return alpha_map(classical_product(x, y, p), p);
}

QTensor classical_coproduct(const QPoly& x, const QParams& p) {
  // Delta of each generator as (left, right) letter pairs
  static const std::map<char, std::vector<std::pair<char, char>>> table = {
      {'a', {{'a', 'a'}, {'b', 'c'}}},
      {'b', {{'a', 'b'}, {'b', 'd'}}},
      {'c', {{'c', 'a'}, {'d', 'c'}}},
      {'d', {{'c', 'b'}, {'d', 'd'}}},
  };
  std::map<std::string, QPoly> cache;
  auto nf = [&](const std::string& w) -> const QPoly& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, normal_form(w, p)).first;
    return it->second;
  };

  QTensor out;
  for (const auto& [m, coef] : x) {
    std::vector<std::pair<std::string, std::string>> words{{"", ""}};
    for (const char letter : m.word()) {
      std::vector<std::pair<std::string, std::string>> next;
      for (const auto& [l, r] : words) {
        for (const auto& [tl, tr] : table.at(letter)) next.emplace_back(l + tl, r + tr);
      }
      words = std::move(next);
    }
    for (const auto& [l, r] : words) add_to(out, tensor_of(nf(l), nf(r)), coef);
  }
  return out;
}

QTensor coproduct(const QPoly& x, const QParams& p, unsigned max_degree) {
  if (degree(x) > max_degree) throw TruncationExceeded("element degree exceeds the cut");
  return classical_coproduct(alpha_map(x, p), p);
}

Scalar counit(const QPoly& x) {
  Scalar out;
  for (const auto& [m, c] : x) {
    if (m.exp[1] == 0 && m.exp[2] == 0) out += c;
  }
  return out;
}

QPoly alpha_map(const QPoly& x, const QParams& p) {
  p.validate();
  QPoly out;
  for (const auto& [m, c] : x) {
    const long shift = static_cast<long>(m.exp[1]) - static_cast<long>(m.exp[2]);
    out.emplace(m, c * pow(p.lambda, shift));
  }
  return out;
}

QPoly det_q(const QParams& p) {
  QPoly out = normal_form("ad", p);
  add_to(out, normal_form("bc", p), -p.q.inverse());
  return out;
}

std::vector<QMonomial> qmatrix_basis(unsigned max_degree) {
  std::vector<QMonomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (unsigned i = d + 1; i-- > 0;) {
      for (unsigned j = d - i + 1; j-- > 0;) {
        for (unsigned k = d - i - j + 1; k-- > 0;) out.push_back(QMonomial{{i, j, k, d - i - j - k}});
      }
    }
  }
  return out;
}

Vec to_vector(const QPoly& x, const std::vector<QMonomial>& basis) {
  Vec v(basis.size());
  for (const auto& [m, c] : x) {
    const auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw TruncationExceeded("monomial " + m.to_string() + " lies above the cut");
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

Vec to_vector(const QTensor& x, const std::vector<QMonomial>& basis) {
  const std::size_t n = basis.size();
  Vec v(n * n);
  auto index = [&](const QMonomial& m) {
    const auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw TruncationExceeded("monomial " + m.to_string() + " lies above the cut");
    return static_cast<std::size_t>(it - basis.begin());
  };
  for (const auto& [mn, c] : x) v[index(mn.first) * n + index(mn.second)] = c;
  return v;
}

HomBialgebra to_hom_bialgebra(const QParams& p, unsigned max_degree) {
  p.validate();
  if (max_degree < 2) throw HypothesisFailed("the degree cut must be at least 2");
  const auto basis = qmatrix_basis(max_degree);
  const std::size_t n = basis.size();
  std::map<QMonomial, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(basis[i], i);

  HomBialgebra b;
  HomAlgebra& alg = b.algebra;
  HomCoalgebra& co = b.coalgebra;
  alg.dim = co.dim = n;
  alg.mul = LinMap(n, n * n);
  Truncation trunc;
  trunc.max_degree = max_degree;
  for (const auto& m : basis) trunc.degree.push_back(m.degree());

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (basis[x].degree() + basis[y].degree() > max_degree) continue;
      for (const auto& [m, c] : multiply(qpoly_from(basis[x]), qpoly_from(basis[y]), p, max_degree)) {
        alg.mul(index.at(m), x * n + y) = c;
      }
    }
  }
  alg.unit = Vec::basis(n, 0);
  alg.alpha = LinMap(n, n);
  for (std::size_t x = 0; x < n; ++x) alg.alpha(x, x) = alpha_map(qpoly_from(basis[x]), p).begin()->second;
  alg.truncation = std::move(trunc);

  co.comul = LinMap(n * n, n);
  co.counit = LinMap(1, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& [mn, c] : coproduct(qpoly_from(basis[x]), p, max_degree)) {
      co.comul(index.at(mn.first) * n + index.at(mn.second), x) = c;
    }
    co.counit(0, x) = counit(qpoly_from(basis[x]));
  }
  co.beta = alg.alpha;
  return b;
}

}  // namespace hombra
