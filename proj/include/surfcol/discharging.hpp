#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "surfcol/embedding.hpp"

namespace surfcol {

// All charge arithmetic is exact: the rule amounts are fractions like 13/28
// and 7/16 and the conservation assertion would not survive floating point.
// Caution: always compare a Charge against a Charge, never a bare int.
// boost 1.74's mixed rational/int operator== recurses into itself when
// compiled as C++20 (the reversed rewritten candidate outranks the member).
using Charge = boost::rational<long long>;

// The four charging schemes. Initial charges and rules differ per scheme:
//   S34, S35: vertex d-6, face 2d-6 (totals 6g-12); high/low vertex split
//             with neighbor and rotation-triple transfers.
//   S41:      vertex d-4, face d-4 (total 4g-8); high/medium/3-vertex rules.
//   S51:      vertex 5d-14, face 2d-14 (total 14g-28); high vertices pay 4
//             to every neighbor.
enum class ChargeScheme { S34, S35, S41, S51 };

std::string to_string(ChargeScheme s);
ChargeScheme charge_scheme_from_name(const std::string& name);

// The degree a vertex needs to count as high, given the scheme parameter K.
int high_threshold(ChargeScheme s, int K);

struct Element {
    bool face = false;  // false: vertex id; true: index into faces()
    int id = 0;
    friend bool operator==(const Element&, const Element&) = default;
};

struct Transfer {
    Element source;
    Element target;
    Charge amount;
    std::string rule;  // "R1".."R4"
};

// Charge state of one audit run. Zero-amount rule firings are omitted from
// the log (they move nothing and would drown the readable entries).
struct ChargeLedger {
    std::vector<Charge> vertex_initial, face_initial;
    std::vector<Charge> vertex_final, face_final;
    std::vector<Transfer> log;

    Charge initial_total() const;
    Charge final_total() const;
};

// Initial charges only; final == initial, empty log.
ChargeLedger initial_charges(const EmbeddedGraph& g, ChargeScheme s);

// Runs the scheme's rules against the initial state (all rules read initial
// charges and degrees, transfers are summed afterwards). Rotation-sensitive
// rules (the consecutive-neighbor triples of S34/S35) follow the embedding's
// rotation order. The log is deterministic: rules in order, elements
// ascending. K is the classification parameter; no default exists because
// the source analyses tie it to the genus of a hypothetical counterexample.
ChargeLedger apply_rules(const EmbeddedGraph& g, ChargeScheme s, int K);

// apply_rules plus conservation check and descriptive notes (girth, scheme
// context violations, negative final charges). Notes are informational: the
// auditor checks bookkeeping, not the analyses' minimality assumptions.
struct AuditReport {
    ChargeScheme scheme = ChargeScheme::S34;
    int K = 0;
    ChargeLedger ledger;
    std::vector<std::string> notes;
};

AuditReport audit(const EmbeddedGraph& g, ChargeScheme s, int K);

}  // namespace surfcol
