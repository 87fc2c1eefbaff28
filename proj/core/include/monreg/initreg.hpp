#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monreg/monomial_ideal.hpp"
#include "monreg/oracle.hpp"
#include "monreg/polynomial.hpp"
#include "monreg/ring.hpp"
#include "monreg/term_order.hpp"

/// Linear sums b_0 + ... + b_t that are regular or initially regular on
/// R/I and R/I^2, and the closed forms behind them.
namespace monreg::initreg {

/// Why a check failed. `code` is a stable identifier such as "star-power",
/// "obstruction" or "clause-d"; `vars` and `generator` carry the witness.
struct Failure {
  std::string code;
  std::vector<VarIndex> vars;
  std::optional<Monomial> generator;

  std::string describe(const RingContext& ring) const;
  bool operator==(const Failure&) const = default;
};

struct Verdict {
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
  bool has(const std::string& code) const;
};

struct StarWitness {
  VarIndex head = 0;
  std::vector<VarIndex> tail;
  TermOrder order;
};

struct StarCheck {
  std::optional<StarWitness> witness;
  /// "star-power": d_{b_i}(I) > 1 at `generator`; "star-cover": `generator`
  /// is divisible by b_0 and by no b_i, i >= 1.
  Verdict verdict;
};

/// Condition (⋆) for s = b_0 + ... + b_t on the minimal generators of I.
StarCheck check_star(const MonomialIdeal& ideal, const LinearSum& s);

/// Every factor of b0 replaced by b1.
Monomial hat_substitute(const Monomial& m, VarIndex b0, VarIndex b1);

/// [J_0, ..., J_s] with J_0 = I and J_i = ini(J_{i-1} + (form_i)).
/// Throws InvalidArgument if the order ranks some form's tail above its head.
std::vector<MonomialIdeal> iterated_initial(const MonomialIdeal& ideal, std::span<const LinearSum> forms,
                                            const TermOrder& order);

struct StepReport {
  bool regular = false;
  std::optional<oracle::MonomialPrime> witness;
};

struct InitialRegularityReport {
  bool regular = true;
  std::vector<MonomialIdeal> chain;
  std::vector<StepReport> steps;
};

/// Each form_i tested as a nonzerodivisor on R/J_{i-1}. With `strict` the
/// test runs against J_i instead, i.e. the ideal already containing
/// ini(form_i).
InitialRegularityReport is_initially_regular(const MonomialIdeal& ideal, std::span<const LinearSum> forms,
                                             const TermOrder& order, bool strict = false);

/// (I^t : b0) ∩ (I^t : b1), which is (I^t : b0 + b1) for t <= 3 under (⋆).
/// Throws HypothesisViolation when (⋆) fails or t is outside 1..3.
MonomialIdeal colon_linear_binomial(const MonomialIdeal& ideal, unsigned t, VarIndex b0, VarIndex b1);

using Pair = std::array<VarIndex, 2>;
using Triple = std::array<VarIndex, 3>;

/// (⋆) for {b0, b1} and no variables c, d (c = d allowed) with b1c, b1d and
/// cd each dividing a minimal generator. The obstruction failure carries
/// (c, d) and the generator divisible by cd.
Verdict criterion_binomial(const MonomialIdeal& ideal, VarIndex b0, VarIndex b1);

/// Pairwise disjoint pairs, each passing criterion_binomial, and no minimal
/// generator divisible by b_{j,1} b_{r,1} for j != r.
Verdict criterion_binomial_family(const MonomialIdeal& ideal, std::span<const Pair> pairs);

/// Clauses (a)-(e) on (b0, b1, b2), with clause (d) imposed at both b1 and b2; every violated clause is reported.
Verdict criterion_trinomial(const MonomialIdeal& ideal, VarIndex b0, VarIndex b1, VarIndex b2);

/// Disjoint triples, each passing criterion_trinomial, with no variable of
/// one triple dividing any M in N(b_{j,1}) or N(b_{j,2}) of another.
Verdict criterion_trinomial_family(const MonomialIdeal& ideal, std::span<const Triple> triples);

/// b0 > b1 > b2 under `order` plus (⋆) and b1b2 dividing no generator.
MonomialIdeal closed_form_ini_trinomial(const MonomialIdeal& ideal, VarIndex b0, VarIndex b1, VarIndex b2,
                                        const TermOrder& order);

/// (b0) + closed_form_ini_trinomial^2; requires criterion_trinomial to pass.
MonomialIdeal closed_form_ini_square_trinomial(const MonomialIdeal& ideal, VarIndex b0, VarIndex b1, VarIndex b2,
                                               const TermOrder& order);

enum class FormKind { binomial, trinomial };
enum class SequenceVerdict { regular, initially_regular };

std::string to_string(FormKind kind);
std::string to_string(SequenceVerdict verdict);

struct SequenceCertificate {
  std::vector<LinearSum> forms;
  std::vector<FormKind> kinds;
  unsigned ideal_power = 2;
  SequenceVerdict verdict = SequenceVerdict::regular;
  std::size_t depth_lower_bound = 0;
  TermOrder order;
  /// Set once is_initially_regular has confirmed the forms.
  bool verified = false;
};

/// Heads of all forms first, then every second variable, then every third,
/// then the rest in declaration order. Satisfies b_{i,0} > b_{i,1} > b_{i,2}.
TermOrder sequence_order(std::size_t nvars, std::span<const Pair> pairs, std::span<const Triple> triples);

struct CombinedResult {
  Verdict verdict;
  std::optional<SequenceCertificate> certificate;
};

/// Pairs passing the binomial family, triples passing the trinomial family,
/// all supports disjoint, and no pair variable dividing an element of
/// N(b_{j,1}) or N(b_{j,2}). The certificate's bound is s + t.
CombinedResult criterion_combined(const MonomialIdeal& ideal, std::span<const Pair> pairs,
                                  std::span<const Triple> triples);

struct SearchOptions {
  /// Branch-and-bound budget for the exact search; once it runs out the
  /// best family so far is extended greedily.
  std::size_t max_nodes = 2'000'000;
};

/// Largest compatible family of passing pairs and triples, re-verified by
/// is_initially_regular on R/I^2 (forms are dropped from the end until it
/// verifies).
SequenceCertificate find_sequences(const MonomialIdeal& ideal, const SearchOptions& options = {});

}  // namespace monreg::initreg
