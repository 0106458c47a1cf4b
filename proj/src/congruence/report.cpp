#include "twist8/congruence/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace twist8 {

namespace {

int mod8(std::int64_t x) { return static_cast<int>(((x % 8) + 8) % 8); }

bool is_bad(const ReductionInfo& r) { return r.type != ReductionType::good; }
bool is_multiplicative(const ReductionInfo& r) {
  return r.type == ReductionType::split || r.type == ReductionType::nonsplit;
}

// Prime divisors of |n| found by trial division up to 10^6, plus a leftover
// cofactor when it is prime.
std::vector<std::int64_t> small_prime_divisors(Integer n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (long p = 2; p <= 1000000 && n > 1; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1 && n.fits_slong_p() && is_prime(n)) out.push_back(n.get_si());
  return out;
}

std::string describe(const char* who, const ReductionInfo& r) { return std::string(who) + " " + to_string(r.type); }

}  // namespace

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::agree:
      return "agree";
    case RowStatus::disagree:
      return "disagree";
    case RowStatus::exception:
      return "exception";
  }
  return "?";
}

ReductionInfo local_data(const Curve& c, std::int64_t p) { return count_points(minimal_model_at(c, p), p); }

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

std::vector<CongruenceRow> ap_table(const Curve& e, const Curve& f, const std::vector<std::int64_t>& primes) {
  std::vector<CongruenceRow> rows;
  for (std::int64_t p : primes) {
    CongruenceRow row;
    row.p = p;
    row.e = local_data(e, p);
    row.f = local_data(f, p);
    row.e_mod8 = mod8(row.e.ap);
    row.f_mod8 = mod8(row.f.ap);
    if (is_bad(row.e) || is_bad(row.f)) {
      row.status = RowStatus::exception;
      std::string reason;
      if (is_bad(row.e)) reason = describe("E", row.e);
      if (is_bad(row.f)) reason += (reason.empty() ? "" : ", ") + describe("F", row.f);
      row.reason = reason;
    } else {
      row.status = row.e_mod8 == row.f_mod8 ? RowStatus::agree : RowStatus::disagree;
    }
    rows.push_back(row);
  }
  return rows;
}

CongruenceReport verify_congruence(const Curve& e, const Curve& f, int r, std::int64_t bound) {
  CongruenceReport rep{e, f, r, bound, {}, {}, true, std::nullopt, false, {}};
  rep.rows = ap_table(e, f, primes_up_to(bound));
  for (const auto& row : rep.rows) {
    if (row.status == RowStatus::exception) rep.exceptions.push_back(row.p);
    if (row.status == RowStatus::disagree) rep.pass = false;
    if (row.status != RowStatus::exception && row.e.ap != row.f.ap && !rep.witness) rep.witness = row.p;
  }
  rep.j_distinct = e.j_invariant() != f.j_invariant();
  rep.valuation_notes = valuation_report(e, f);
  return rep;
}

std::optional<std::int64_t> non_isogeny_witness(const Curve& e, const Curve& f, std::int64_t bound) {
  for (std::int64_t p : primes_up_to(bound)) {
    const ReductionInfo re = local_data(e, p);
    if (is_bad(re)) continue;
    const ReductionInfo rf = local_data(f, p);
    if (is_bad(rf)) continue;
    if (re.ap != rf.ap) return p;
  }
  return std::nullopt;
}

std::vector<ValuationNote> valuation_report(const Curve& e, const Curve& f) {
  // Candidates: 2, 3 and the primes dividing both discriminant numerators.
  const Integer ne = e.discriminant().get_num();
  const Integer nf = f.discriminant().get_num();
  Integer g;
  mpz_gcd(g.get_mpz_t(), ne.get_mpz_t(), nf.get_mpz_t());
  std::vector<std::int64_t> candidates = small_prime_divisors(g);
  for (std::int64_t p : {2, 3}) {
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end()) candidates.push_back(p);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<ValuationNote> notes;
  for (std::int64_t p : candidates) {
    const ReductionInfo re = local_data(e, p);
    const ReductionInfo rf = local_data(f, p);
    if (is_multiplicative(re) && is_multiplicative(rf)) notes.push_back({p, re.type, rf.type, re.vdelta, rf.vdelta});
  }
  return notes;
}

std::string to_csv(const std::vector<CongruenceRow>& rows) {
  std::ostringstream os;
  os << "p,apE,apF,apE_mod8,apF_mod8,status\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.e.ap << ',' << r.f.ap << ',' << r.e_mod8 << ',' << r.f_mod8 << ',' << to_string(r.status)
       << '\n';
  }
  return os.str();
}

}  // namespace twist8
