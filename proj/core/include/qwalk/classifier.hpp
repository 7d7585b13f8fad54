#pragma once

#include "qwalk/sigmadist.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qwalk {

// One machine-checked fact behind a decision.
struct TrailEntry {
    std::string rule;
    std::string evidence;
};

// A factor of a signed decoupling and its sign under iota1 (for h_{k,1}) or iota2 (for h_{k,2}).
struct SignCertificate {
    std::string factor;
    int sign;
    std::string evidence;
};

enum class HomKind { BotRow, SignedSolution, Solution };

struct HomStatus {
    HomKind kind = HomKind::BotRow;
    std::vector<int> bot_rows; // 1-based rows of M1 made of bot only
    int eps1 = 0;              // signed solution: h1^iota1 = eps1 h1
    int eps2 = 0;              //                  h2^iota2 = eps2 h2
    std::vector<SignCertificate> certificates;
    std::string h1; // Solution only
    std::string h2;

    bool has_solution() const { return kind == HomKind::Solution; }
    std::string to_string() const;
};

// Expected homogeneous table cell for (stepset, A, B).
struct TableCell {
    HomKind kind;
    std::vector<int> bot_rows;
    int eps1 = 0;
    int eps2 = 0;
    std::string to_string() const;
};
TableCell homogeneous_table_cell(Support s, const Rat& A, const Rat& B);

// Throws TableCellMismatch when the computed evidence contradicts the table.
HomStatus homogeneous_analysis(const Model& m, const DistanceMatrix& M1);

struct IdentityCheck {
    std::string lemma;
    std::string item;
    std::string lambda; // empty when the identity has no parameter
};
// Every identity whose hypothesis the model satisfies, checked modulo K.
// Throws IdentityFailed(lemma, residual) on the first failure.
std::vector<IdentityCheck> verify_identity_lemmas(const Model& m);

// Zero test of f modulo the kernel; the residue is returned as a string when nonzero.
std::optional<std::string> kernel_residual(const Model& m, const LaurentXY& f);

struct PoleConfinement {
    bool h1_confined = false; // every M1 entry negative or bot
    bool h2_confined = false; // every M2 entry negative or bot
    bool edge_case = false;   // S1, B = 1/2, A != 1/2

    std::string to_string() const;
};
PoleConfinement inhomogeneous_analysis(const Model& m, const DistanceMatrix& M1, const DistanceMatrix& M2);

// Facts the S1, B = 1/2 argument rests on: the only nonnegative entry of M2 is
// delta(i2 P4, P4) = 1, and the zeros of u gamma2 are P4 and i2 P4.
// Throws PreconditionFailed off the edge case and EvidenceFailed when a fact fails.
std::vector<TrailEntry> edge_case_checks(const Model& m, const CriticalSets& sets, const MatrixPair& mats);
std::vector<TrailEntry> edge_case_checks(const Model& m);

// 1 / (1 - var * c) (power 1) or (1 - var^2 * c)^(-1/2) (power 2).
struct ClosedForm {
    std::string variable;
    int power = 1;
    RatFunc c;

    // [t^n] for n = 0..N, each a polynomial in the variable.
    std::vector<PolyT> series(int N) const;
    std::string to_string() const;
};

enum class Verdict { Rational, Algebraic, NotDAlgebraic };
std::string verdict_name(Verdict v);

struct Classification {
    Verdict verdict;
    std::optional<ClosedForm> qx0;
    std::optional<ClosedForm> q0y;
    std::vector<TrailEntry> trail;
};

struct ClassifyOptions {
    int window = default_window;
    unsigned seed = 0;
};

// Throws CoverageGap when no rule decides the model.
Classification classify(const Model& m, const ClassifyOptions& opts = {});

// Closed forms against the enumerator up to t^N; throws OracleMismatch(n).
void verify_closed_form(const Model& m, const Classification& c, int N);

} // namespace qwalk
