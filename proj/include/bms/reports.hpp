#pragma once

#include "bms/freefield.hpp"
#include "bms/verma.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bms {

using Json = nlohmann::ordered_json;

/// Structured JSON form of a polynomial: a list of terms
/// {"coeff": "p/q", "exps": {"h2": 1, ...}} in canonical term order.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Serialized Gram data: level, basis monomials, both matrices, the signed
/// diagonal-product determinant of the Gram matrix, and the D-matrix diagonal.
struct GramReport {
    HalfInt level;
    std::vector<IndexTriple> basis;
    PolyMatrix gram;
    PolyMatrix dmat;
    Poly det;
    std::vector<Poly> diagonal;

    static GramReport build(const GramData& data);
};

Json to_json(const GramReport& r);
GramReport gram_report_from_json(const Json& j);
std::string gram_report_csv(const GramReport& r, const std::string& which);  // "gram" | "dmat"
std::string gram_report_text(const GramReport& r);

/// One commutation-relation residual line plus the suite summary.
struct ResidualSuiteReport {
    std::string spec_kind;  // "verma" | "whittaker"
    Poly rho;
    HalfInt max_mode;
    HalfInt cutoff;
    std::vector<ResidualReport> pairs;
    bool all_zero = true;
};

Json to_json(const ResidualReport& r, const Poly& rho);
Json to_json(const ResidualSuiteReport& r);
ResidualSuiteReport residual_suite_from_json(const Json& j);
std::string residual_suite_text(const ResidualSuiteReport& r);

/// Runs the residual suite over every unordered generator pair with
/// |mode| <= max_mode on all basis vectors of depth <= cutoff.
ResidualSuiteReport run_residual_suite(const HcModuleSpec& spec, const FfrParams& params,
                                       HalfInt max_mode, HalfInt cutoff);

struct SimplicityReport {
    std::string kind;  // verma | vacuum | fock | hc-whittaker | fock-whittaker | bms-whittaker
    std::vector<std::pair<std::string, std::string>> inputs;  // name -> rational text
    bool simple = false;
    std::vector<long long> violations;
    bool exhaustive = true;
};

Json to_json(const SimplicityReport& r);
SimplicityReport simplicity_report_from_json(const Json& j);
std::string simplicity_report_text(const SimplicityReport& r);

struct SingularReport {
    HalfInt level;
    WeightParams params;
    long long mode_cutoff = 0;
    std::vector<VermaVector> vectors;
};

Json to_json(const SingularReport& r);
SingularReport singular_report_from_json(const Json& j);
std::string singular_report_text(const SingularReport& r);

struct WhittakerTableReport {
    Poly rho;
    HcModuleSpec spec;
    std::vector<std::pair<Generator, FockVector>> table;
};

Json to_json(const WhittakerTableReport& r);
WhittakerTableReport whittaker_report_from_json(const Json& j);
std::string whittaker_report_text(const WhittakerTableReport& r);

struct PartitionReport {
    HalfInt n;
    long long count = 0;
};

Json to_json(const PartitionReport& r);
PartitionReport partition_report_from_json(const Json& j);

std::string dump_json(const Json& j);

}  // namespace bms
