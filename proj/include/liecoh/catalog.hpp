#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/classifier.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/symplectic.hpp"

namespace liecoh {

/// One line of a catalog file:
///   name: (t1,...,tn) [; key=value ...]
/// Keys: lattice_asserted, symplectic_expected, source, expected_betti,
/// expected_verdict. Expected values require a source note (provenance).
struct CatalogEntry {
    std::string name;
    std::string tuple_text;
    int line = 0;

    bool lattice_asserted = false;
    std::optional<bool> symplectic_expected;
    std::string source;

    std::optional<std::vector<long>> expected_betti;
    std::optional<SymplecticVerdict> expected_verdict;
};

/// Throws CatalogError with 1-based line/column on grammar violations and
/// duplicate names.
std::vector<CatalogEntry> parse_catalog(std::string_view bytes);
std::vector<CatalogEntry> parse_catalog_file(const std::string& path);

struct EntryReport {
    CatalogEntry entry;
    std::string error;  // nonempty when the entry failed (isolates the batch)

    int dim = 0;
    StructureReport structure;
    std::vector<long> betti;
    SymplecticReport symplectic;
    ClassEvidence evidence;
    std::vector<std::string> mismatches;  // expectation comparison failures
    long micros = 0;                      // wall time; text output only

    bool ok() const { return error.empty() && mismatches.empty(); }
};

struct RunOptions {
    SymplecticOptions symplectic;
    int jobs = 1;
    bool with_witness = false;  // print witnesses in text output
};

struct Report {
    std::vector<EntryReport> entries;
    int entries_failed = 0;     // per-entry input errors
    int expectation_mismatches = 0;
};

/// Runs the full pipeline per entry (Jacobi gate, structure report, Betti
/// numbers, symplectic verdict, class evidence, expectation regression).
/// Entries run concurrently up to jobs; output order is input order.
Report run_catalog(const std::vector<CatalogEntry>& entries, const RunOptions& opts = {});

/// Line-delimited records with stable field names (one JSON object per
/// entry); byte-identical for identical input bytes and flags.
std::string machine_format(const Report& report);

void text_format(const Report& report, std::ostream& out, bool with_witness = false);

/// Exit status: 0 all checks pass, 1 expectation mismatch, 2 input error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecoh
