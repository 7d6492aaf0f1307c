#include "torusjump/chaincx.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "torusjump/errors.hpp"
#include "torusjump/intmat.hpp"

namespace torusjump {

namespace {

int parity_sign(int i) { return ((i % 2) + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

FreeComplex::FreeComplex(LaurentRing ring, int lo, std::vector<int> ranks,
                         std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)),
      lo_(lo),
      ranks_(std::move(ranks)),
      diffs_(std::move(diffs)) {
  validate();
}

void FreeComplex::validate() const {
  if (ranks_.empty()) throw ShapeError("complex needs at least one degree");
  for (std::size_t k = 0; k < ranks_.size(); ++k)
    if (ranks_[k] < 0)
      throw ShapeError("negative rank in degree " +
                       std::to_string(lo_ + static_cast<int>(k)));
  if (diffs_.size() + 1 != ranks_.size())
    throw ShapeError("expected " + std::to_string(ranks_.size() - 1) +
                     " differentials, got " + std::to_string(diffs_.size()));
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    int degree = lo_ + static_cast<int>(k);
    if (diffs_[k].ring() != ring_)
      throw RingMismatchError("differential at degree " +
                              std::to_string(degree) + " has the wrong ring");
    if (diffs_[k].rows() != static_cast<std::size_t>(ranks_[k + 1]) ||
        diffs_[k].cols() != static_cast<std::size_t>(ranks_[k]))
      throw ShapeError("differential at degree " + std::to_string(degree) +
                       " has shape " + std::to_string(diffs_[k].rows()) + "x" +
                       std::to_string(diffs_[k].cols()) + ", expected " +
                       std::to_string(ranks_[k + 1]) + "x" +
                       std::to_string(ranks_[k]));
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
    int degree = lo_ + static_cast<int>(k);
    if (!matmul(diffs_[k + 1], diffs_[k]).is_zero())
      throw ComplexConditionError(
          degree, "differential composition is nonzero at degree " +
                      std::to_string(degree));
  }
}

int FreeComplex::rank_at(int degree) const {
  if (degree < lo_ || degree > hi()) return 0;
  return ranks_[static_cast<std::size_t>(degree - lo_)];
}

PolyMatrix FreeComplex::differential(int degree) const {
  if (degree >= lo_ && degree < hi())
    return diffs_[static_cast<std::size_t>(degree - lo_)];
  return PolyMatrix(ring_, static_cast<std::size_t>(rank_at(degree + 1)),
                    static_cast<std::size_t>(rank_at(degree)));
}

long long FreeComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < ranks_.size(); ++k)
    chi += parity_sign(lo_ + static_cast<int>(k)) * ranks_[k];
  return chi;
}

FreeComplex FreeComplex::reduce_coefficients(const CoeffDomain& target) const {
  std::vector<PolyMatrix> diffs;
  diffs.reserve(diffs_.size());
  for (const PolyMatrix& d : diffs_)
    diffs.push_back(d.reduce_coefficients(target));
  return FreeComplex(ring_.with_coeff(target), lo_, ranks_, std::move(diffs));
}

FreeComplex FreeComplex::twisted(std::span<const mpq_class> lambda) const {
  std::vector<PolyMatrix> diffs;
  diffs.reserve(diffs_.size());
  for (const PolyMatrix& d : diffs_) diffs.push_back(d.scale_vars(lambda));
  return FreeComplex(ring_, lo_, ranks_, std::move(diffs));
}

FreeComplex FreeComplex::shifted(int s) const {
  std::vector<PolyMatrix> diffs = diffs_;
  if (parity_sign(s) < 0)
    for (PolyMatrix& d : diffs)
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(i, j) = -d.at(i, j);
  return FreeComplex(ring_, lo_ - s, ranks_, std::move(diffs));
}

bool FreeComplex::operator==(const FreeComplex& other) const {
  return ring_ == other.ring_ && lo_ == other.lo_ && ranks_ == other.ranks_ &&
         diffs_ == other.diffs_;
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                      std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (c[i] < n - k + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace

FreeComplex koszul_torus(int n, const CoeffDomain& coeff) {
  if (n < 1) throw DomainError("torus dimension must be at least 1");
  LaurentRing ring(n, coeff);
  std::size_t nn = static_cast<std::size_t>(n);
  std::vector<int> ranks;
  std::vector<PolyMatrix> diffs;
  std::vector<std::vector<std::size_t>> lower = subsets_of_size(nn, 0);
  for (int i = 0; i <= n; ++i)
    ranks.push_back(static_cast<int>(
        subsets_of_size(nn, static_cast<std::size_t>(i)).size()));
  for (int i = 0; i < n; ++i) {
    auto upper = subsets_of_size(nn, static_cast<std::size_t>(i) + 1);
    PolyMatrix d(ring, upper.size(), lower.size());
    std::map<std::vector<std::size_t>, std::size_t> upper_index;
    for (std::size_t u = 0; u < upper.size(); ++u) upper_index[upper[u]] = u;
    for (std::size_t s = 0; s < lower.size(); ++s) {
      for (std::size_t j = 0; j < nn; ++j) {
        if (std::find(lower[s].begin(), lower[s].end(), j) != lower[s].end())
          continue;
        std::vector<std::size_t> target = lower[s];
        target.push_back(j);
        std::sort(target.begin(), target.end());
        std::size_t before =
            static_cast<std::size_t>(std::count_if(
                lower[s].begin(), lower[s].end(),
                [j](std::size_t x) { return x < j; }));
        Polynomial entry =
            Polynomial::variable(ring, static_cast<int>(j)) -
            Polynomial::one(ring);
        if (before % 2 == 1) entry = -entry;
        d.at(upper_index.at(target), s) = entry;
      }
    }
    diffs.push_back(std::move(d));
    lower = std::move(upper);
  }
  return FreeComplex(ring, 0, std::move(ranks), std::move(diffs));
}

FreeComplex tensor_product(const FreeComplex& a, const FreeComplex& b,
                           TensorMode mode) {
  const FreeComplex* pa = &a;
  const FreeComplex* pb = &b;
  FreeComplex lifted_a = a, lifted_b = b;
  if (mode == TensorMode::SameRing) {
    if (a.ring() != b.ring())
      throw RingMismatchError("same-ring tensor across different rings");
  } else {
    if (!(a.ring().coeff() == b.ring().coeff()))
      throw RingMismatchError("tensor factors use different coefficients");
    LaurentRing big(a.ring().num_vars() + b.ring().num_vars(),
                    a.ring().coeff());
    // a keeps its variables; b's variables become the trailing block.
    auto lift_matrix = [&](const PolyMatrix& m, bool trailing) {
      PolyMatrix r(big, m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
          Polynomial p(big);
          std::vector<Term> terms;
          for (const Term& t : m.at(i, j).terms()) {
            std::vector<std::uint32_t> e(
                static_cast<std::size_t>(big.num_vars()), 0);
            for (std::size_t v = 0; v < t.mono.nvars(); ++v)
              e[trailing ? v + static_cast<std::size_t>(a.ring().num_vars())
                         : v] = t.mono[v];
            terms.push_back(Term{Monomial(std::move(e)), t.coeff});
          }
          r.at(i, j) = Polynomial::from_terms(big, std::move(terms));
        }
      return r;
    };
    auto lift_complex = [&](const FreeComplex& c, bool trailing) {
      std::vector<PolyMatrix> diffs;
      for (int d = c.lo(); d < c.hi(); ++d)
        diffs.push_back(lift_matrix(c.differential(d), trailing));
      return FreeComplex(big, c.lo(), c.ranks(), std::move(diffs));
    };
    lifted_a = lift_complex(a, false);
    lifted_b = lift_complex(b, true);
    pa = &lifted_a;
    pb = &lifted_b;
  }
  const FreeComplex& x = *pa;
  const FreeComplex& y = *pb;
  const LaurentRing& ring = x.ring();
  int lo = x.lo() + y.lo();
  int hi = x.hi() + y.hi();
  // Degree k summands (i, k-i) ordered by ascending i.
  auto summands = [&](int k) {
    std::vector<std::pair<int, int>> out;
    for (int i = x.lo(); i <= x.hi(); ++i)
      if (x.rank_at(i) > 0 && y.rank_at(k - i) > 0)
        out.emplace_back(i, k - i);
    return out;
  };
  std::vector<int> ranks;
  for (int k = lo; k <= hi; ++k) {
    int r = 0;
    for (auto [i, j] : summands(k)) r += x.rank_at(i) * y.rank_at(j);
    ranks.push_back(r);
  }
  std::vector<PolyMatrix> diffs;
  for (int k = lo; k < hi; ++k) {
    auto src = summands(k);
    auto dst = summands(k + 1);
    std::size_t rows = 0, cols = 0;
    std::map<std::pair<int, int>, std::size_t> dst_offset, src_offset;
    for (auto s : dst) {
      dst_offset[s] = rows;
      rows += static_cast<std::size_t>(x.rank_at(s.first) *
                                       y.rank_at(s.second));
    }
    for (auto s : src) {
      src_offset[s] = cols;
      cols += static_cast<std::size_t>(x.rank_at(s.first) *
                                       y.rank_at(s.second));
    }
    PolyMatrix d(ring, rows, cols);
    for (auto [i, j] : src) {
      std::size_t co = src_offset[{i, j}];
      std::size_t ra = static_cast<std::size_t>(x.rank_at(i));
      std::size_t rb = static_cast<std::size_t>(y.rank_at(j));
      // d(a tensor b) = d(a) tensor b + (-1)^i a tensor d(b)
      if (dst_offset.count({i + 1, j})) {
        PolyMatrix dx = x.differential(i);
        std::size_t ro = dst_offset[{i + 1, j}];
        for (std::size_t p = 0; p < dx.rows(); ++p)
          for (std::size_t q = 0; q < ra; ++q)
            if (!dx.at(p, q).is_zero())
              for (std::size_t v = 0; v < rb; ++v)
                d.at(ro + p * rb + v, co + q * rb + v) = dx.at(p, q);
      }
      if (dst_offset.count({i, j + 1})) {
        PolyMatrix dy = y.differential(j);
        std::size_t ro = dst_offset[{i, j + 1}];
        int sign = parity_sign(i);
        for (std::size_t u = 0; u < ra; ++u)
          for (std::size_t p = 0; p < dy.rows(); ++p)
            for (std::size_t v = 0; v < rb; ++v)
              if (!dy.at(p, v).is_zero())
                d.at(ro + u * dy.rows() + p, co + u * rb + v) =
                    sign > 0 ? dy.at(p, v) : -dy.at(p, v);
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

GroupPresentation GroupPresentation::make(
    int num_generators, std::vector<std::vector<int>> relators) {
  if (num_generators < 1)
    throw DomainError("presentation needs at least one generator");
  GroupPresentation p;
  p.num_generators = num_generators;
  for (std::vector<int>& w : relators) {
    std::vector<int> reduced;
    for (int x : w) {
      if (x == 0 || std::abs(x) > num_generators)
        throw DomainError("relator letter " + std::to_string(x) +
                          " out of range");
      if (!reduced.empty() && reduced.back() == -x)
        reduced.pop_back();
      else
        reduced.push_back(x);
    }
    p.relators.push_back(std::move(reduced));
  }
  return p;
}

std::vector<int> GroupPresentation::word_from_string(const std::string& word) {
  std::vector<int> w;
  for (char c : word) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c >= 'a' && c <= 'z')
      w.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z')
      w.push_back(-(c - 'A' + 1));
    else
      throw ParseError(std::string("bad letter '") + c +
                       "' in relator word; use a-z and A-Z for inverses");
  }
  return w;
}

FreeComplex fox_complex(const GroupPresentation& pres,
                        const CoeffDomain& coeff) {
  int g = pres.num_generators;
  std::size_t r = pres.relators.size();
  LaurentRing ring(g, coeff);

  IntMatrix expsum(r, static_cast<std::size_t>(g));
  for (std::size_t w = 0; w < r; ++w)
    for (int x : pres.relators[w])
      expsum.at(w, static_cast<std::size_t>(std::abs(x) - 1)) +=
          (x > 0 ? 1 : -1);
  for (const mpz_class& d : smith_divisors(expsum))
    if (d > 1)
      throw UnsupportedError(
          "abelianization has torsion (elementary divisor " + d.get_str() +
          "); only free abelianizations are supported");

  std::vector<int> ranks{1, g};
  PolyMatrix d0(ring, static_cast<std::size_t>(g), 1);
  for (int j = 0; j < g; ++j)
    d0.at(static_cast<std::size_t>(j), 0) =
        Polynomial::variable(ring, j) - Polynomial::one(ring);
  std::vector<PolyMatrix> diffs{std::move(d0)};

  if (r > 0) {
    PolyMatrix d1(ring, r, static_cast<std::size_t>(g));
    for (std::size_t w = 0; w < r; ++w) {
      // Free-derivative walk: signed Laurent terms keyed by exponent vector.
      std::vector<std::map<std::vector<int>, mpq_class>> deriv(
          static_cast<std::size_t>(g));
      std::vector<int> abel(static_cast<std::size_t>(g), 0);
      for (int x : pres.relators[w]) {
        std::size_t j = static_cast<std::size_t>(std::abs(x) - 1);
        if (x > 0) {
          deriv[j][abel] += 1;
          abel[j] += 1;
        } else {
          abel[j] -= 1;
          deriv[j][abel] -= 1;
        }
      }
      std::vector<int> shift(static_cast<std::size_t>(g), 0);
      for (const auto& dj : deriv)
        for (const auto& [e, c] : dj) {
          if (c == 0) continue;
          for (std::size_t v = 0; v < shift.size(); ++v)
            shift[v] = std::min(shift[v], e[v]);
        }
      for (int j = 0; j < g; ++j) {
        std::vector<Term> terms;
        for (const auto& [e, c] : deriv[static_cast<std::size_t>(j)]) {
          if (c == 0) continue;
          std::vector<std::uint32_t> exps(static_cast<std::size_t>(g));
          for (std::size_t v = 0; v < exps.size(); ++v)
            exps[v] = static_cast<std::uint32_t>(e[v] - shift[v]);
          terms.push_back(Term{Monomial(std::move(exps)), c});
        }
        d1.at(w, static_cast<std::size_t>(j)) =
            Polynomial::from_terms(ring, std::move(terms));
      }
    }
    ranks.push_back(static_cast<int>(r));
    diffs.push_back(std::move(d1));
  }
  return FreeComplex(ring, 0, std::move(ranks), std::move(diffs));
}

FreeComplex wedge_of_circles(int k, const CoeffDomain& coeff) {
  if (k < 1) throw DomainError("wedge needs at least one circle");
  return fox_complex(GroupPresentation::make(k, {}), coeff);
}

FreeComplex surface_complex(int genus, const CoeffDomain& coeff) {
  if (genus < 1) throw DomainError("genus must be at least 1");
  std::vector<int> relator;
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    relator.insert(relator.end(), {a, b, -a, -b});
  }
  return fox_complex(GroupPresentation::make(2 * genus, {relator}), coeff);
}

namespace {

CoeffDomain coeff_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "QQ") return CoeffDomain::rationals();
    if (s == "ZZ") return CoeffDomain::integers();
    throw ParseError(where + ": unknown coefficient domain \"" + s + "\"");
  }
  if (j.is_object() && j.contains("Fp") &&
      j["Fp"].is_number_integer())
    return CoeffDomain::prime_field(j["Fp"].get<long>());
  throw ParseError(where + ": expected \"QQ\", \"ZZ\", or {\"Fp\": p}");
}

nlohmann::json coeff_to_json(const CoeffDomain& d) {
  switch (d.kind()) {
    case CoeffKind::Rational:
      return "QQ";
    case CoeffKind::Integer:
      return "ZZ";
    case CoeffKind::PrimeField:
      return nlohmann::json{{"Fp", d.prime()}};
  }
  throw std::logic_error("bad coeff kind");
}

int int_field(const nlohmann::json& j, const std::string& key,
              const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(where + "/" + key + ": expected an integer");
  return j[key].get<int>();
}

}  // namespace

FreeComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("/: expected an object");
  if (!j.contains("ring") || !j["ring"].is_object())
    throw ParseError("/ring: expected an object");
  int num_vars = int_field(j["ring"], "num_vars", "/ring");
  if (!j["ring"].contains("coeff"))
    throw ParseError("/ring/coeff: missing");
  CoeffDomain coeff = coeff_from_json(j["ring"]["coeff"], "/ring/coeff");
  LaurentRing ring(num_vars, coeff);
  int lo = int_field(j, "lo", "");
  int hi = int_field(j, "hi", "");
  if (hi < lo) throw ParseError("/hi: must be at least lo");
  if (!j.contains("ranks") || !j["ranks"].is_object())
    throw ParseError("/ranks: expected an object");
  std::vector<int> ranks;
  for (int d = lo; d <= hi; ++d) {
    std::string key = std::to_string(d);
    if (!j["ranks"].contains(key))
      throw ParseError("/ranks/" + key + ": missing");
    if (!j["ranks"][key].is_number_integer() || j["ranks"][key].get<int>() < 0)
      throw ParseError("/ranks/" + key + ": expected a non-negative integer");
    ranks.push_back(j["ranks"][key].get<int>());
  }
  for (auto it = j["ranks"].begin(); it != j["ranks"].end(); ++it) {
    int d;
    try {
      d = std::stoi(it.key());
    } catch (const std::logic_error&) {
      throw ParseError("/ranks/" + it.key() + ": key is not a degree");
    }
    if (d < lo || d > hi)
      throw ParseError("/ranks/" + it.key() + ": degree outside [lo, hi]");
  }
  std::vector<PolyMatrix> diffs;
  nlohmann::json empty_obj = nlohmann::json::object();
  const nlohmann::json& dj =
      j.contains("differentials") ? j["differentials"] : empty_obj;
  if (!dj.is_object()) throw ParseError("/differentials: expected an object");
  for (auto it = dj.begin(); it != dj.end(); ++it) {
    int d;
    try {
      d = std::stoi(it.key());
    } catch (const std::logic_error&) {
      throw ParseError("/differentials/" + it.key() + ": key is not a degree");
    }
    if (d < lo || d >= hi)
      throw ParseError("/differentials/" + it.key() +
                       ": degree outside [lo, hi)");
  }
  for (int d = lo; d < hi; ++d) {
    std::string key = std::to_string(d);
    std::size_t rows = static_cast<std::size_t>(ranks[d - lo + 1]);
    std::size_t cols = static_cast<std::size_t>(ranks[d - lo]);
    PolyMatrix m(ring, rows, cols);
    if (dj.contains(key)) {
      const nlohmann::json& rowsj = dj[key];
      std::string where = "/differentials/" + key;
      if (!rowsj.is_array() || rowsj.size() != rows)
        throw ParseError(where + ": expected " + std::to_string(rows) +
                         " rows for degree " + key);
      for (std::size_t i = 0; i < rows; ++i) {
        if (!rowsj[i].is_array() || rowsj[i].size() != cols)
          throw ParseError(where + "/" + std::to_string(i) + ": expected " +
                           std::to_string(cols) + " entries for degree " +
                           key);
        for (std::size_t c = 0; c < cols; ++c) {
          if (!rowsj[i][c].is_string())
            throw ParseError(where + "/" + std::to_string(i) + "/" +
                             std::to_string(c) + ": expected a string");
          try {
            m.at(i, c) =
                Polynomial::parse(ring, rowsj[i][c].get<std::string>());
          } catch (const Error& e) {
            throw ParseError(where + "/" + std::to_string(i) + "/" +
                             std::to_string(c) + ": " + e.what());
          }
        }
      }
    }
    diffs.push_back(std::move(m));
  }
  return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

nlohmann::json complex_to_json(const FreeComplex& c) {
  nlohmann::json j;
  j["ring"] = {{"num_vars", c.ring().num_vars()},
               {"coeff", coeff_to_json(c.ring().coeff())}};
  j["lo"] = c.lo();
  j["hi"] = c.hi();
  nlohmann::json ranks = nlohmann::json::object();
  for (int d = c.lo(); d <= c.hi(); ++d)
    ranks[std::to_string(d)] = c.rank_at(d);
  j["ranks"] = std::move(ranks);
  nlohmann::json diffs = nlohmann::json::object();
  for (int d = c.lo(); d < c.hi(); ++d) {
    PolyMatrix m = c.differential(d);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t col = 0; col < m.cols(); ++col)
        row.push_back(m.at(i, col).to_string());
      rows.push_back(std::move(row));
    }
    diffs[std::to_string(d)] = std::move(rows);
  }
  j["differentials"] = std::move(diffs);
  return j;
}

std::string complex_to_canonical_text(const FreeComplex& c) {
  return complex_to_json(c).dump(2) + "\n";
}

FreeComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return complex_from_json(j);
}

void save_complex(const FreeComplex& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << complex_to_canonical_text(c);
}

}  // namespace torusjump
