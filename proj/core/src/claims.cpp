#include "simulacra/claims.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "simulacra/cone.hpp"
#include "simulacra/constructions.hpp"
#include "simulacra/expression.hpp"
#include "simulacra/fixtures.hpp"
#include "simulacra/search.hpp"

namespace simulacra {

namespace {

struct ClaimName {
  ClaimId id;
  std::string_view name;
};

constexpr std::array<ClaimName, 17> kClaims{{
    {ClaimId::Table1, "table1"},
    {ClaimId::Table2, "table2"},
    {ClaimId::H2Consistency, "h2-consistency"},
    {ClaimId::LorentzNoSimulacra, "lorentz-no-simulacra"},
    {ClaimId::RealPsd, "real-psd"},
    {ClaimId::ComplexPsd, "complex-psd"},
    {ClaimId::ComplexPsd3None, "complex-psd-3-none"},
    {ClaimId::QuaternionPsd, "quaternion-psd"},
    {ClaimId::OctonionPsd, "octonion-psd"},
    {ClaimId::DoubleComplex, "double-complex"},
    {ClaimId::Thm4Region, "thm4-region"},
    {ClaimId::Table3, "table3"},
    {ClaimId::LmLn, "lmln"},
    {ClaimId::LnLnExhaustive, "lnln-exhaustive"},
    {ClaimId::LnLnAppendixB, "lnln-appendixB"},
    {ClaimId::LnLnFormula, "lnln-formula"},
    {ClaimId::BoundaryCounterexamples, "boundary-counterexamples"},
}};

constexpr std::array<ClaimId, 17> kAllClaims = [] {
  std::array<ClaimId, 17> ids{};
  for (std::size_t i = 0; i < kClaims.size(); ++i) ids[i] = kClaims[i].id;
  return ids;
}();

// Closed forms of the building-block table, written out independently of
// factor_dim/factor_rank so the two can be compared.
Signature closed_form(Kind kind, Int n) {
  switch (kind) {
    case Kind::Lorentz: return {n, (n * n - n + 2) / 2};
    case Kind::RealPSD: return {(n * n + n) / 2, n * n};
    case Kind::ComplexPSD: return {n * n, 2 * n * n - 1};
    case Kind::QuaternionPSD: return {2 * n * n - n, 4 * n * n};
    case Kind::OctonionPSD: return {27, 79};
  }
  return {};
}

SearchPolicy full_policy(const VerifyOptions& o) {
  SearchPolicy p = SearchPolicy::full();
  p.threads = o.threads;
  return p;
}

std::string join(const std::vector<Cone>& cones) {
  if (cones.empty()) return "none";
  std::string out;
  for (const Cone& c : cones) {
    if (!out.empty()) out += "; ";
    out += format_cone(c);
  }
  return out;
}

// Re-checks a claimed simulacrum without trusting the search: round-trip the
// witness through its text form, recompute both signatures, and require
// distinct canonical forms.
bool revalidates(const Cone& witness, const Cone& target) {
  const Cone reparsed = parse_cone(format_cone(witness));
  return reparsed == witness && relation(reparsed, target) == Relation::Simulacra;
}

Record sig_record(const std::string& input, const Signature& expected,
                  const Signature& actual) {
  return {input, to_string(expected), to_string(actual), std::nullopt,
          expected == actual};
}

Record witness_record(const std::string& input, const Cone& target,
                      const Cone& witness) {
  const bool ok = revalidates(witness, target);
  return {input, "Simulacra " + to_string(signature(target)),
          std::string(relation_name(relation(witness, target))) + " " +
              to_string(signature(witness)),
          format_cone(witness), ok};
}

// Exhaustive search whose expected outcome is a specific set of simulacra
// (possibly empty).
Record search_record(const Cone& target, const std::vector<Cone>& expected,
                     const SearchPolicy& policy) {
  const auto found = find_simulacra(target, policy);
  bool ok = found == expected;
  for (const Cone& c : found) ok = ok && revalidates(c, target);
  Record r{format_cone(target), join(expected), join(found), std::nullopt, ok};
  if (!found.empty()) r.witness = format_cone(found.front());
  return r;
}

void table1(Report& rep) {
  for (Int n = 2; n <= 50; ++n) {
    for (Kind kind : {Kind::Lorentz, Kind::RealPSD, Kind::ComplexPSD,
                      Kind::QuaternionPSD}) {
      const Factor f{kind, n};
      rep.records.push_back(sig_record(format_factor(f), closed_form(kind, n),
                                       signature(Cone::canonicalize({f}))));
    }
  }
  rep.records.push_back(sig_record("H3(O)", closed_form(Kind::OctonionPSD, 3),
                                   signature(octonion_psd())));
}

void table2(Report& rep) {
  for (Int n = 0; n <= 50; ++n) {
    rep.records.push_back(sig_record("R" + std::to_string(n), {n, n},
                                     signature(orthant(n))));
  }
}

void h2_consistency(Report& rep) {
  const std::array<std::pair<Kind, Int>, 3> cases{
      {{Kind::RealPSD, 3}, {Kind::ComplexPSD, 4}, {Kind::QuaternionPSD, 6}}};
  for (const auto& [kind, image] : cases) {
    const Factor f{kind, 2};
    const Cone canon = Cone::canonicalize({f});
    const Signature formula = closed_form(kind, 2);
    const Signature lorentz_sig = signature(lorentz(image));
    const bool ok = canon == lorentz(image) && formula == lorentz_sig &&
                    signature(canon) == formula;
    rep.records.push_back({format_factor(f),
                           "L" + std::to_string(image) + " " + to_string(formula),
                           format_cone(canon) + " " + to_string(signature(canon)),
                           std::nullopt, ok});
  }
}

void lorentz_no_simulacra(Report& rep, const VerifyOptions& o) {
  for (Int n = 0; n <= 15; ++n) {
    rep.records.push_back(search_record(lorentz(n), {}, full_policy(o)));
  }
}

template <typename Build, typename Target>
void construction_range(Report& rep, Int lo, Int hi, Build build, Target target) {
  for (Int n = lo; n <= hi; ++n) {
    const Cone t = target(n);
    rep.records.push_back(witness_record(format_cone(t), t, build(n)));
  }
}

void thm4_region(Report& rep, const VerifyOptions& o) {
  const SearchPolicy policy = full_policy(o);
  for (Int n = 3; n <= 14; ++n) {
    std::vector<std::string> violations;
    Int checked = 0;
    for (Int dk = 1; dk * (dk - 1) <= 4 * n - 10; ++dk) {
      for (const Cone& k : enumerate_cones(dk, SearchPolicy::full())) {
        const ConditionReport cond = check_conditions(k, n);
        if (!(cond.c1 && cond.c2)) continue;
        ++checked;
        const Cone ln = lorentz(n);
        for (const Cone& j : find_simulacra(k + ln, policy)) {
          const auto rest = remove_subcone(j, ln);
          if (!rest || relation(*rest, k) != Relation::Simulacra) {
            violations.push_back("K = " + format_cone(k) + ", J = " + format_cone(j));
          }
        }
      }
    }
    const std::string expected =
        n == 4 ? "1 violation: K = R2, J = H3(R)" : "0 violations";
    std::string actual = std::to_string(violations.size()) +
                         (violations.size() == 1 ? " violation" : " violations");
    for (std::size_t i = 0; i < violations.size(); ++i) {
      actual += (i == 0 ? ": " : "; ") + violations[i];
    }
    Record r{"n=" + std::to_string(n) + " (" + std::to_string(checked) + " K)",
             expected, actual, std::nullopt, actual == expected};
    if (n == 4 && r.ok) {
      const Cone j = real_psd(3);
      r.witness = format_cone(j);
      r.ok = revalidates(j, orthant(2) + lorentz(4));
    }
    rep.records.push_back(std::move(r));
  }
}

void table3(Report& rep, const VerifyOptions& o) {
  const auto rows = complex_plus_lorentz_rows();
  for (Int n = 2; n <= 30; ++n) {
    const Cone target = complex_psd(3) + lorentz(n);
    const auto found = find_simulacra(target, full_policy(o));
    const auto row = std::find_if(rows.begin(), rows.end(),
                                  [n](const auto& r) { return r.n == n; });
    Record r{format_cone(target), row == rows.end() ? "none" : "simulacra",
             found.empty() ? "none" : std::to_string(found.size()) + " simulacra",
             std::nullopt, false};
    if (row == rows.end()) {
      r.ok = found.empty();
    } else {
      const Cone published = parse_cone(row->witness);
      r.witness = format_cone(published);
      const Signature s = signature(target);
      r.ok = s == Signature{row->dim, row->rank} && revalidates(published, target) &&
             std::find(found.begin(), found.end(), published) != found.end();
      for (const Cone& c : found) r.ok = r.ok && revalidates(c, target);
    }
    rep.records.push_back(std::move(r));
  }
}

void lmln(Report& rep, const VerifyOptions& o) {
  for (Int m = 1; m <= 8; ++m) {
    const Int lo = (m * m - 3 * m + 6) / 2;
    for (Int n = lo; n <= lo + 10; ++n) {
      std::vector<Cone> expected;
      if (m == 2 && n == 4) expected.push_back(real_psd(3));
      Record r = search_record(lorentz(m) + lorentz(n), expected, full_policy(o));
      r.input = "L" + std::to_string(m) + " + L" + std::to_string(n);
      rep.records.push_back(std::move(r));
    }
  }
}

bool lnln_exceptional(Int n) {
  const auto ex = lnln_exceptions();
  return std::find(ex.begin(), ex.end(), n) != ex.end();
}

void lnln_exhaustive(Report& rep, const VerifyOptions& o) {
  for (Int n = 0; n <= 30; ++n) {
    const Cone target = lorentz(n) + lorentz(n);
    const bool expect = !lnln_exceptional(n);
    const auto witness = has_simulacra(target, full_policy(o));
    Record r{format_cone(target), expect ? "simulacra" : "none",
             witness ? "simulacra" : "none", std::nullopt, expect == witness.has_value()};
    if (witness) {
      r.witness = format_cone(*witness);
      r.ok = r.ok && revalidates(*witness, target);
    }
    rep.records.push_back(std::move(r));
  }
}

void lnln_appendix_b(Report& rep) {
  const auto rows = parse_lnln_fixture(lnln_fixture_text());
  std::vector<Int> listed;
  for (const LnLnWitness& w : rows) {
    if (w.n > 100) continue;
    listed.push_back(w.n);
    Int dim = 0;
    Int rank = 0;
    std::vector<Factor> raw;
    for (Int p : w.parts) {
      dim += p;
      rank += lorentz_rank(p);
      raw.push_back({Kind::Lorentz, p});
    }
    const Cone witness = Cone::canonicalize(raw);
    const Cone target = lorentz(w.n) + lorentz(w.n);
    Record r{"n=" + std::to_string(w.n),
             "(" + std::to_string(2 * w.n) + ", " +
                 std::to_string(w.n * w.n - w.n + 2) + ")",
             "(" + std::to_string(dim) + ", " + std::to_string(rank) + ")",
             format_cone(witness), false};
    r.ok = r.expected == r.actual && revalidates(witness, target);
    rep.records.push_back(std::move(r));
  }
  // Every n <= 100 outside the exceptional set must be covered.
  std::vector<Int> wanted;
  for (Int n = 0; n <= 100; ++n) {
    if (!lnln_exceptional(n)) wanted.push_back(n);
  }
  std::sort(listed.begin(), listed.end());
  rep.records.push_back({"fixture coverage", std::to_string(wanted.size()) + " rows",
                         std::to_string(listed.size()) + " rows", std::nullopt,
                         listed == wanted});
}

void lnln_formula(Report& rep) {
  for (Int n = 100; n <= 300; ++n) {
    const Cone target = lorentz(n) + lorentz(n);
    const BigLnLnParams p = big_lnln_params(n);
    const Cone j = big_lnln_simulacrum(n);
    Record r = witness_record(format_cone(target), target, j);
    const Factor lead{Kind::Lorentz, n + 2 * p.m};
    r.ok = r.ok && j.factors().front() == lead && p.alpha >= 0 && p.gamma >= 0;
    rep.records.push_back(std::move(r));
  }
}

void boundary(Report& rep) {
  for (Int m = 5; m <= 30; ++m) {
    const auto cx = condition1_boundary_counterexample(m);
    Record r = witness_record(format_cone(cx.left), cx.left, cx.right);
    r.input = "m=" + std::to_string(m) + ", n=" + std::to_string(cx.n) + ": " + r.input;
    rep.records.push_back(std::move(r));
  }
}

}  // namespace

std::span<const ClaimId> all_claims() { return kAllClaims; }

std::string_view claim_name(ClaimId id) {
  for (const auto& c : kClaims) {
    if (c.id == id) return c.name;
  }
  return "?";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& c : kClaims) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

Report verify_claim(ClaimId id, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.claim = id;
  switch (id) {
    case ClaimId::Table1: table1(rep); break;
    case ClaimId::Table2: table2(rep); break;
    case ClaimId::H2Consistency: h2_consistency(rep); break;
    case ClaimId::LorentzNoSimulacra: lorentz_no_simulacra(rep, options); break;
    case ClaimId::RealPsd:
      construction_range(rep, 3, 100, simulacrum_real_psd, real_psd);
      rep.records.push_back(search_record(real_psd(3), {lorentz(4) + orthant(2)},
                                          full_policy(options)));
      break;
    case ClaimId::ComplexPsd:
      construction_range(rep, 4, 100, simulacrum_complex_psd, complex_psd);
      break;
    case ClaimId::ComplexPsd3None:
      rep.records.push_back(search_record(complex_psd(3), {}, full_policy(options)));
      break;
    case ClaimId::QuaternionPsd:
      construction_range(rep, 3, 100, simulacrum_quaternion_psd, quaternion_psd);
      break;
    case ClaimId::OctonionPsd:
      rep.records.push_back(
          witness_record("H3(O)", octonion_psd(), simulacrum_octonion_psd()));
      break;
    case ClaimId::DoubleComplex:
      rep.records.push_back(witness_record("2*H3(C)", complex_psd(3) + complex_psd(3),
                                           simulacrum_double_complex()));
      break;
    case ClaimId::Thm4Region: thm4_region(rep, options); break;
    case ClaimId::Table3: table3(rep, options); break;
    case ClaimId::LmLn: lmln(rep, options); break;
    case ClaimId::LnLnExhaustive: lnln_exhaustive(rep, options); break;
    case ClaimId::LnLnAppendixB: lnln_appendix_b(rep); break;
    case ClaimId::LnLnFormula: lnln_formula(rep); break;
    case ClaimId::BoundaryCounterexamples: boundary(rep); break;
  }
  rep.pass = !rep.records.empty() &&
             std::all_of(rep.records.begin(), rep.records.end(),
                         [](const Record& r) { return r.ok; });
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

Table make_table(std::string_view which, const VerifyOptions& options) {
  Table t;
  if (which == "1") {
    t.columns = {"cone", "n", "dim", "rank"};
    t.matches_fixture = true;
    for (Kind kind : {Kind::Lorentz, Kind::RealPSD, Kind::ComplexPSD,
                      Kind::QuaternionPSD, Kind::OctonionPSD}) {
      for (Int n = 2; n <= 10; ++n) {
        if (kind == Kind::OctonionPSD && n != 3) continue;
        const Factor f{kind, n};
        const Signature s = signature(Cone::canonicalize({f}));
        t.matches_fixture = t.matches_fixture && s == closed_form(kind, n);
        t.rows.push_back({format_factor(f), std::to_string(n), std::to_string(s.dim),
                          std::to_string(s.rank)});
      }
    }
    return t;
  }
  if (which == "2") {
    t.columns = {"cone", "n", "dim", "rank"};
    t.matches_fixture = true;
    for (Int n = 0; n <= 10; ++n) {
      const Signature s = signature(orthant(n));
      t.matches_fixture = t.matches_fixture && s == Signature{n, n};
      t.rows.push_back({"R" + std::to_string(n), std::to_string(n),
                        std::to_string(s.dim), std::to_string(s.rank)});
    }
    return t;
  }
  if (which == "3") {
    t.columns = {"cone", "dim", "rank", "witness", "simulacra_found"};
    const auto rows = complex_plus_lorentz_rows();
    t.matches_fixture = true;
    std::size_t matched = 0;
    for (Int n = 2; n <= 30; ++n) {
      const Cone target = complex_psd(3) + lorentz(n);
      const auto found = find_simulacra(target, full_policy(options));
      const auto row = std::find_if(rows.begin(), rows.end(),
                                    [n](const auto& r) { return r.n == n; });
      if (found.empty()) {
        t.matches_fixture = t.matches_fixture && row == rows.end();
        continue;
      }
      const Signature s = signature(target);
      std::string witness = format_cone(found.front());
      if (row == rows.end()) {
        t.matches_fixture = false;
      } else {
        ++matched;
        const Cone published = parse_cone(row->witness);
        const bool listed =
            std::find(found.begin(), found.end(), published) != found.end();
        t.matches_fixture = t.matches_fixture && listed &&
                            s == Signature{row->dim, row->rank};
        if (listed) witness = format_cone(published);
      }
      t.rows.push_back({format_cone(target), std::to_string(s.dim),
                        std::to_string(s.rank), witness,
                        std::to_string(found.size())});
    }
    t.matches_fixture = t.matches_fixture && matched == rows.size();
    return t;
  }
  if (which == "B") {
    t.columns = {"n", "fixture_partition", "fixture_valid", "searched_witness"};
    t.matches_fixture = true;
    SearchPolicy policy = full_policy(options);
    for (const LnLnWitness& w : parse_lnln_fixture(lnln_fixture_text())) {
      std::vector<Factor> raw;
      std::string parts;
      for (Int p : w.parts) {
        raw.push_back({Kind::Lorentz, p});
        parts += (parts.empty() ? "" : ",") + std::to_string(p);
      }
      const Cone target = lorentz(w.n) + lorentz(w.n);
      const bool valid = revalidates(Cone::canonicalize(raw), target);
      const auto searched = has_simulacra(target, policy);
      const bool searched_ok = searched && revalidates(*searched, target);
      t.matches_fixture = t.matches_fixture && valid && searched_ok;
      t.rows.push_back({std::to_string(w.n), parts, valid ? "yes" : "no",
                        searched ? format_cone(*searched) : "none"});
    }
    return t;
  }
  throw std::invalid_argument("unknown table '" + std::string(which) +
                              "' (expected 1, 2, 3 or B)");
}

}  // namespace simulacra
