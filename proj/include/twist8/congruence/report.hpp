#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twist8/elliptic/curve.hpp"
#include "twist8/elliptic/reduction.hpp"

namespace twist8 {

enum class RowStatus { agree, disagree, exception };
std::string to_string(RowStatus s);

struct CongruenceRow {
  std::int64_t p = 0;
  ReductionInfo e, f;
  int e_mod8 = 0, f_mod8 = 0;
  RowStatus status = RowStatus::agree;
  /// For exceptions, e.g. "F multiplicative-split".
  std::string reason;
};

/// Both curves multiplicative at p, with discriminant valuations.
struct ValuationNote {
  std::int64_t p = 0;
  ReductionType e_type = ReductionType::split, f_type = ReductionType::split;
  long v_e = 0, v_f = 0;
};

struct CongruenceReport {
  Curve e, f;
  int r = 1;
  std::int64_t bound = 0;
  std::vector<CongruenceRow> rows;
  std::vector<std::int64_t> exceptions;  // bad for at least one curve
  bool pass = false;                     // agreement at every common good prime
  std::optional<std::int64_t> witness;   // common good prime with a_p(E) != a_p(F)
  bool j_distinct = false;
  std::vector<ValuationNote> valuation_notes;
};

/// Reduction data at p computed on a model minimal at p, so non-minimal
/// inputs (short models at 2 and 3, recovered family members) are handled.
ReductionInfo local_data(const Curve& c, std::int64_t p);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

std::vector<CongruenceRow> ap_table(const Curve& e, const Curve& f, const std::vector<std::int64_t>& primes);

CongruenceReport verify_congruence(const Curve& e, const Curve& f, int r, std::int64_t bound);

std::optional<std::int64_t> non_isogeny_witness(const Curve& e, const Curve& f, std::int64_t bound);

/// Every prime at which both curves have multiplicative reduction (split or
/// not), with v_p of the minimal discriminants.
std::vector<ValuationNote> valuation_report(const Curve& e, const Curve& f);

/// CSV with header p,apE,apF,apE_mod8,apF_mod8,status.
std::string to_csv(const std::vector<CongruenceRow>& rows);

}  // namespace twist8
