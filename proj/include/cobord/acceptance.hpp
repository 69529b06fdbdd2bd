#pragma once
#include <string>
#include <vector>

#include "cobord/serialize.hpp"

namespace cobord::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;  // wall time; reported in text, never in JSON
};

struct Report {
    std::vector<CriterionResult> criteria;
    bool all_pass() const;
};

// Criteria 1-8, built from scratch (no cache involved).
Report run_core();

// Criteria 1-9; the determinism criterion regenerates the core report and
// compares bytes.
Report run_all();

// Stable JSON (id, name, pass, details only).
serialize::Json report_json(const Report& report);

// Number of partitions of d (independent of any table).
long partition_count(int d);

}  // namespace cobord::acceptance
