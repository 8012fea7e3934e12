#include <algorithm>
#include <stdexcept>

#include "combo_format.hpp"
#include "dcoset/classify.hpp"
#include "dcoset/errors.hpp"

namespace dcoset {

namespace {

using Combo = std::vector<std::int64_t>;
using Factor = std::pair<Combo, int>;

Combo negated(Combo c) {
  for (auto& x : c) x = -x;
  return c;
}

Combo unit(std::size_t dim, std::size_t i, std::int64_t c = 1) {
  Combo v(dim, 0);
  v[i] = c;
  return v;
}

Combo times(Combo a, std::int64_t k) {
  for (auto& x : a) x *= k;
  return a;
}

Combo sum(Combo a, const Combo& b, std::int64_t scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

std::vector<std::string> names(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

enum class Basis { Free, EBasis, Halves };

// Weights as integer combinations of named characters, plus monomials given
// as products of weights; resolved into a WeightSystem and exponent vectors.
class CaseBuilder {
 public:
  CaseBuilder(int id, std::string title, std::vector<std::string> basis, Basis kind = Basis::Free)
      : id_(id), title_(std::move(title)), basis_(std::move(basis)), kind_(kind) {}

  std::size_t dim() const { return basis_.size(); }

  void weight(Combo c) { combos_.push_back(std::move(c)); }
  void weight_pm(const Combo& c) {
    weight(c);
    weight(negated(c));
  }

  void monomial(std::vector<Factor> factors) { monomials_.push_back(std::move(factors)); }
  void pair(const Combo& c) { monomial({{c, 1}, {negated(c), 1}}); }
  void product(const std::vector<Combo>& factors) {
    std::vector<Factor> f;
    for (const auto& c : factors) f.emplace_back(c, 1);
    monomial(std::move(f));
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  AppendixCase build() const {
    AppendixCase out;
    out.id = id_;
    out.title = title_;
    out.notes = notes_;
    std::vector<std::string> labels;
    for (const auto& c : combos_) {
      std::string label = detail::format_combo(c, basis_);
      labels.push_back(kind_ == Basis::Halves ? "(" + label + ")/2" : label);
    }
    switch (kind_) {
      case Basis::Free:
        out.system = WeightSystem(dim(), combos_, std::move(labels));
        break;
      case Basis::EBasis:
        out.system = from_e_basis(dim(), combos_, std::move(labels));
        break;
      case Basis::Halves: {
        std::vector<std::vector<Rational>> halves;
        for (const auto& c : combos_) {
          std::vector<Rational> w;
          for (auto x : c) w.emplace_back(x, 2);
          halves.push_back(std::move(w));
        }
        out.system = clear_denominators(dim(), halves, std::move(labels));
        break;
      }
    }
    for (const auto& factors : monomials_) {
      Relation r{std::vector<std::int32_t>(combos_.size(), 0)};
      for (const auto& [combo, power] : factors) {
        const auto it = std::find(combos_.begin(), combos_.end(), combo);
        if (it == combos_.end()) {
          throw std::logic_error("appendix case " + std::to_string(id_) + ": no weight " +
                                 detail::format_combo(combo, basis_));
        }
        r.exponents[static_cast<std::size_t>(it - combos_.begin())] += power;
      }
      if (std::find(out.listed.begin(), out.listed.end(), r) == out.listed.end()) {
        out.listed.push_back(std::move(r));
      }
    }
    return out;
  }

 private:
  int id_;
  std::string title_;
  std::vector<std::string> basis_;
  Basis kind_;
  std::vector<Combo> combos_;
  std::vector<std::vector<Factor>> monomials_;
  std::vector<std::string> notes_;
};

AppendixCase case_sgl_gl(std::size_t n, std::size_t m) {
  CaseBuilder b(1, "S(GL_n x GL_m) in SL_{n+m}, n = " + std::to_string(n) + ", m = " + std::to_string(m),
                names("e", n + m), Basis::EBasis);
  const std::size_t k = n + m;
  auto arc = [&](std::size_t i, std::size_t j) { return sum(unit(k, i), unit(k, j), -1); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n; j < k; ++j) b.weight_pm(arc(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n; j < k; ++j) b.pair(arc(i, j));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      for (std::size_t j = n; j < k; ++j)
        for (std::size_t l = j + 1; l < k; ++l) {
          b.product({arc(a, j), arc(c, l), negated(arc(a, l)), negated(arc(c, j))});
          b.product({arc(a, l), arc(c, j), negated(arc(a, j)), negated(arc(c, l))});
        }
  b.note("quartics transcribed with two indices from each block: X_{e_a-e_j} X_{e_c-e_l} "
         "X_{-e_a+e_l} X_{-e_c+e_j} and the same with j, l exchanged");
  return b.build();
}

AppendixCase case_sp6() {
  CaseBuilder b(2, "Sp_6 in SL_6", names("e", 3));
  const Combo e1 = unit(3, 0), e2 = unit(3, 1), e3 = unit(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) b.weight_pm(sum(unit(3, i), unit(3, j), -1));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) b.weight_pm(sum(unit(3, i), unit(3, j)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) b.pair(sum(unit(3, i), unit(3, j)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) b.pair(sum(unit(3, i), unit(3, j), -1));
  // X_{e1+e2} X_{e3-e1} X_{-e2-e3}, X_{e1+e2} X_{e3-e2} X_{-e1-e3} and
  // their images under the cyclic shift 1 -> 2 -> 3 -> 1.
  const Combo cyc[3] = {e1, e2, e3};
  for (std::size_t s = 0; s < 3; ++s) {
    const Combo& x = cyc[s];
    const Combo& y = cyc[(s + 1) % 3];
    const Combo& z = cyc[(s + 2) % 3];
    b.product({sum(x, y), sum(z, x, -1), negated(sum(y, z))});
    b.product({sum(x, y), sum(z, y, -1), negated(sum(x, z))});
  }
  return b.build();
}

AppendixCase case_kx_sp4() {
  CaseBuilder b(3, "k* . Sp_4 in SL_5", names("e", 3));
  const Combo e1 = unit(3, 0), e2 = unit(3, 1), t = unit(3, 2, 5);
  const Combo es[2] = {e1, e2};
  b.weight_pm(sum(e1, e2, -1));
  b.weight_pm(sum(e1, e2));
  for (const auto& ei : es) {
    b.weight_pm(sum(t, ei));
    b.weight_pm(sum(t, ei, -1));
  }
  b.pair(sum(e1, e2, -1));
  b.pair(sum(e1, e2));
  for (const auto& ei : es) {
    b.pair(sum(t, ei));
    b.pair(sum(t, ei, -1));
  }
  // X_{5e3 +- e_i} X_{-5e3 +- e_j} X_{-+e_i -+ e_j}, i != j.
  for (std::int64_t s : {1, -1})
    for (std::size_t i = 0; i < 2; ++i) {
      const Combo& ei = es[i];
      const Combo& ej = es[1 - i];
      b.product({sum(t, ei, s), sum(negated(t), ej, s), times(sum(ei, ej), -s)});
    }
  return b.build();
}

AppendixCase case_so4() {
  CaseBuilder b(4, "SO_4 in SL_4", names("e", 2));
  const Combo e1 = unit(2, 0), e2 = unit(2, 1);
  b.weight_pm(sum(e1, e2, -1));
  b.weight_pm(sum(e1, e2));
  b.weight_pm(times(e1, 2));
  b.weight_pm(times(e2, 2));
  b.pair(sum(e1, e2));
  b.pair(sum(e1, e2, -1));
  b.pair(times(e1, 2));
  b.pair(times(e2, 2));
  b.product({sum(e1, e2, -1), negated(sum(e1, e2)), times(e2, 2)});
  b.product({sum(e2, e1, -1), sum(e1, e2), times(e2, -2)});
  b.monomial({{times(e1, 2), 1}, {times(e2, 2), 1}, {negated(sum(e1, e2)), 2}});
  return b.build();
}

AppendixCase case_so3() {
  CaseBuilder b(5, "SO_3 in SL_3", names("e", 1));
  const Combo e = unit(1, 0);
  b.weight(e);
  b.weight(negated(e));
  b.weight(times(e, 2));
  b.weight(times(e, -2));
  b.pair(e);
  b.pair(times(e, 2));
  b.monomial({{e, 2}, {times(e, -2), 1}});
  b.monomial({{negated(e), 2}, {times(e, 2), 1}});
  return b.build();
}

AppendixCase case_sp2_sp4() {
  CaseBuilder b(6, "Sp_2 x Sp_4 in Sp_6", names("e", 3));
  const Combo e1 = unit(3, 0), e2 = unit(3, 1), e3 = unit(3, 2);
  for (const auto& ei : {e2, e3}) {
    b.weight_pm(sum(e1, ei));
    b.weight_pm(sum(e1, ei, -1));
  }
  for (const auto& ei : {e2, e3}) {
    b.pair(sum(e1, ei));
    b.pair(sum(e1, ei, -1));
  }
  b.product({sum(e1, e2), sum(e1, e2, -1), sum(e3, e1, -1), negated(sum(e1, e3))});
  b.product({sum(e1, e3), sum(e1, e3, -1), sum(e2, e1, -1), negated(sum(e1, e2))});
  b.note("the quadratic generators are printed as X_{e1+-ei} + X_{-e1-+ei}; read as the product, "
         "whose weight sum is zero");
  b.note("the last factor X_{-e-e2} is read as X_{-e1-e2}");
  return b.build();
}

AppendixCase case_sp2n_kx(std::size_t n) {
  CaseBuilder b(7, "Sp_2n x k* in Sp_2n+2, n = " + std::to_string(n), names("e", n + 1));
  const std::size_t k = n + 1;
  const Combo last = unit(k, n);
  for (std::size_t i = 0; i < n; ++i) {
    b.weight_pm(sum(unit(k, i), last));
    b.weight_pm(sum(unit(k, i), last, -1));
  }
  b.weight_pm(times(last, 2));
  for (std::size_t i = 0; i < n; ++i) {
    const Combo ei = unit(k, i);
    b.pair(sum(ei, last));
    b.pair(sum(ei, last, -1));
    b.product({sum(ei, last), sum(last, ei, -1), times(last, -2)});
    b.product({sum(ei, last, -1), negated(sum(ei, last)), times(last, 2)});
  }
  b.pair(times(last, 2));
  return b.build();
}

AppendixCase case_gl4_so8() {
  CaseBuilder b(8, "GL_4 in SO_8", names("e", 4));
  auto w = [](std::size_t i, std::size_t j) { return sum(unit(4, i), unit(4, j)); };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) b.weight_pm(w(i, j));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) b.pair(w(i, j));
  b.product({w(0, 1), w(2, 3), negated(w(0, 2)), negated(w(1, 3))});
  b.product({w(0, 1), w(2, 3), negated(w(0, 3)), negated(w(1, 2))});
  b.product({w(0, 2), w(1, 3), negated(w(0, 1)), negated(w(2, 3))});
  b.product({w(0, 2), w(1, 3), negated(w(0, 3)), negated(w(1, 2))});
  return b.build();
}

AppendixCase case_gl2_sp4() {
  CaseBuilder b(9, "GL_2 in Sp_4", names("e", 2));
  const Combo e1 = unit(2, 0), e2 = unit(2, 1), s = sum(e1, e2);
  b.weight_pm(s);
  b.weight_pm(times(e1, 2));
  b.weight_pm(times(e2, 2));
  b.pair(s);
  b.pair(times(e1, 2));
  b.pair(times(e2, 2));
  b.monomial({{s, 2}, {times(e1, -2), 1}, {times(e2, -2), 1}});
  b.monomial({{negated(s), 2}, {times(e1, 2), 1}, {times(e2, 2), 1}});
  return b.build();
}

AppendixCase case_so2_so4() {
  CaseBuilder b(10, "SO_2 x SO_4 in SO_6", {"e1", "d1", "d2"});
  const Combo e = unit(3, 0), d1 = unit(3, 1), d2 = unit(3, 2);
  for (const auto& d : {d1, d2}) {
    b.weight_pm(sum(e, d));
    b.weight_pm(sum(e, d, -1));
  }
  for (const auto& d : {d1, d2}) {
    b.pair(sum(e, d));
    b.pair(sum(e, d, -1));
  }
  b.product({sum(e, d1), sum(e, d1, -1), sum(d2, e, -1), negated(sum(e, d2))});
  b.product({sum(e, d2), sum(e, d2, -1), sum(d1, e, -1), negated(sum(e, d1))});
  return b.build();
}

AppendixCase case_so2_so3() {
  CaseBuilder b(11, "SO_2 x SO_3 in SO_5", {"e1", "d1"});
  const Combo e = unit(2, 0), d = unit(2, 1);
  b.weight_pm(sum(e, d));
  b.weight_pm(sum(e, d, -1));
  b.weight_pm(e);
  b.pair(e);
  b.pair(sum(e, d));
  b.pair(sum(e, d, -1));
  b.monomial({{sum(e, d), 1}, {sum(e, d, -1), 1}, {negated(e), 2}});
  b.monomial({{sum(d, e, -1), 1}, {negated(sum(e, d)), 1}, {e, 2}});
  return b.build();
}

AppendixCase case_spin7_so9() {
  CaseBuilder b(12, "Spin_7 in SO_9", names("e", 3));
  for (std::size_t k = 0; k < 3; ++k) b.weight_pm(unit(3, k, 2));
  for (std::int64_t s2 : {1, -1})
    for (std::int64_t s3 : {1, -1}) b.weight_pm({1, s2, s3});
  for (std::size_t k = 0; k < 3; ++k) b.pair(unit(3, k, 2));
  for (std::int64_t s2 : {1, -1})
    for (std::int64_t s3 : {1, -1}) b.pair({1, s2, s3});
  for (std::int64_t s2 : {1, -1})
    for (std::int64_t s3 : {1, -1}) b.product({{1, s2, s3}, {1, -s2, -s3}, unit(3, 0, -2)});
  b.note("the cubic family X_{e1+-e2+-e3} X_{e1-+e2-+e3} X_{-2e1} has two distinct members");
  b.note("listed monomials do not outnumber the quotient dimension; singularity rests on the full basis");
  return b.build();
}

AppendixCase case_spin7_so2() {
  CaseBuilder b(13, "Spin_7 x SO_2 in SO_10", {"e1", "e2", "e3", "d"});
  for (std::int64_t s2 : {1, -1})
    for (std::int64_t s3 : {1, -1})
      for (std::int64_t sd : {1, -1}) b.weight_pm({1, s2, s3, sd});
  for (std::size_t k = 0; k < 3; ++k) b.weight_pm(unit(4, k, 2));
  for (std::size_t k = 0; k < 3; ++k) b.pair(unit(4, k, 2));
  for (std::int64_t s1 : {1, -1})
    for (std::int64_t s2 : {1, -1})
      for (std::int64_t s3 : {1, -1}) b.pair({s1, s2, s3, 1});
  for (std::int64_t s2 : {1, -1})
    for (std::int64_t s3 : {1, -1})
      for (std::int64_t sd : {1, -1}) b.product({{1, s2, s3, sd}, {1, -s2, -s3, -sd}, unit(4, 0, -2)});
  b.note("the cubic family X_{e1+-e2+-e3+-d} X_{e1-+e2-+e3-+d} X_{-2e1} has four distinct members");
  b.note("listed monomials do not outnumber the quotient dimension; singularity rests on the full basis");
  return b.build();
}

AppendixCase case_g2_so7() {
  CaseBuilder b(14, "G_2 in SO_7", names("e", 3), Basis::EBasis);
  auto w = [](std::size_t i, std::size_t j) { return sum(unit(3, i), unit(3, j)); };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) b.weight_pm(w(i, j));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) b.pair(w(i, j));
  b.product({w(0, 1), w(0, 2), w(1, 2)});
  b.product({negated(w(0, 1)), negated(w(0, 2)), negated(w(1, 2))});
  return b.build();
}

AppendixCase case_b4_f4() {
  CaseBuilder b(15, "B_4 in F_4", names("e", 4), Basis::Halves);
  for (std::int64_t s2 : {1, -1})
    for (std::int64_t s3 : {1, -1})
      for (std::int64_t s4 : {1, -1}) b.weight_pm({1, s2, s3, s4});
  for (std::int64_t s2 : {1, -1})
    for (std::int64_t s3 : {1, -1})
      for (std::int64_t s4 : {1, -1}) b.pair({1, s2, s3, s4});
  b.product({{1, 1, 1, -1}, {1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}});
  b.note("the pair family is printed with e3 twice; the fourth sign is read as belonging to e4");
  b.note("listed monomials do not outnumber the quotient dimension; singularity rests on the full basis");
  return b.build();
}

AppendixCase case_a2_g2() {
  CaseBuilder b(16, "A_2 in G_2", names("e", 3), Basis::EBasis);
  for (std::size_t i = 0; i < 3; ++i) b.weight_pm(unit(3, i));
  for (std::size_t i = 0; i < 3; ++i) b.pair(unit(3, i));
  b.product({unit(3, 0), unit(3, 1), unit(3, 2)});
  b.product({unit(3, 0, -1), unit(3, 1, -1), unit(3, 2, -1)});
  return b.build();
}

}  // namespace

AppendixCase appendix_case(int id, std::optional<std::pair<int, int>> params) {
  if (id < 1 || id > kAppendixCases) {
    throw InvalidParameters("appendix case must be between 1 and " + std::to_string(kAppendixCases) +
                            ", got " + std::to_string(id));
  }
  if (params && id != 1 && id != 7) {
    throw InvalidParameters("appendix case " + std::to_string(id) + " takes no parameters");
  }
  switch (id) {
    case 1: {
      const auto [n, m] = params.value_or(std::pair{2, 2});
      if (!(n >= m && m >= 2)) throw InvalidParameters("appendix case 1 requires n >= m >= 2");
      return case_sgl_gl(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    }
    case 2:
      return case_sp6();
    case 3:
      return case_kx_sp4();
    case 4:
      return case_so4();
    case 5:
      return case_so3();
    case 6:
      return case_sp2_sp4();
    case 7: {
      const auto [n, unused] = params.value_or(std::pair{2, 0});
      if (n < 1 || unused != 0) throw InvalidParameters("appendix case 7 takes a single n >= 1");
      return case_sp2n_kx(static_cast<std::size_t>(n));
    }
    case 8:
      return case_gl4_so8();
    case 9:
      return case_gl2_sp4();
    case 10:
      return case_so2_so4();
    case 11:
      return case_so2_so3();
    case 12:
      return case_spin7_so9();
    case 13:
      return case_spin7_so2();
    case 14:
      return case_g2_so7();
    case 15:
      return case_b4_f4();
    default:
      return case_a2_g2();
  }
}

AppendixReport verify_appendix_case(int id, std::optional<std::pair<int, int>> params,
                                    const CompletionOptions& options) {
  const AppendixCase c = appendix_case(id, params);
  AppendixReport report;
  report.case_id = id;
  report.title = c.title;
  report.notes = c.notes;
  report.listed_count = c.listed.size();

  report.listed_all_invariant = true;
  report.listed_all_irreducible = true;
  for (const auto& mono : c.listed) {
    if (!is_invariant(c.system, mono)) {
      report.listed_all_invariant = false;
      report.listed_all_irreducible = false;
      continue;
    }
    if (!is_irreducible(c.system, mono)) report.listed_all_irreducible = false;
  }

  const HilbertBasis hb = hilbert_basis(c.system, options);
  report.hb_size = hb.elements.size();
  report.quotient_dim = hb.quotient_dim;
  report.singular_confirmed = report.hb_size > report.quotient_dim;
  report.listed_in_basis = std::all_of(c.listed.begin(), c.listed.end(), [&](const Relation& r) {
    return std::binary_search(hb.elements.begin(), hb.elements.end(), r);
  });
  return report;
}

}  // namespace dcoset
