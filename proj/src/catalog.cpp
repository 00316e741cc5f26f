#include "liecoh/catalog.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

std::string trim(std::string s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    auto head = s[0];
    if (!std::isalpha(static_cast<unsigned char>(head)) && head != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-' &&
            c != '+')
            return false;
    return true;
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw CatalogError("expected true/false, got '" + v + "'", line, 1);
}

std::vector<long> parse_betti_list(const std::string& v, int line) {
    std::vector<long> out;
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) throw CatalogError("empty entry in expected_betti", line, 1);
        try {
            out.push_back(std::stol(tok));
        } catch (...) {
            throw CatalogError("bad integer '" + tok + "' in expected_betti", line, 1);
        }
    }
    if (out.empty()) throw CatalogError("empty expected_betti", line, 1);
    return out;
}

SymplecticVerdict parse_verdict(const std::string& v, int line) {
    if (v == "SYMPLECTIC") return SymplecticVerdict::Symplectic;
    if (v == "NOT_SYMPLECTIC") return SymplecticVerdict::NotSymplectic;
    if (v == "UNKNOWN") return SymplecticVerdict::Unknown;
    throw CatalogError("bad expected_verdict '" + v + "'", line, 1);
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view bytes) {
    std::vector<CatalogEntry> entries;
    std::map<std::string, int> seen;  // name -> line

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        std::string line(bytes.substr(pos, eol == std::string_view::npos ? bytes.size() - pos
                                                                         : eol - pos));
        pos = eol == std::string_view::npos ? bytes.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw CatalogError("expected 'name: (tuple)'", line_no, 1);
        CatalogEntry e;
        e.line = line_no;
        e.name = trim(line.substr(0, colon));
        if (!valid_name(e.name)) throw CatalogError("bad entry name '" + e.name + "'", line_no, 1);
        if (auto it = seen.find(e.name); it != seen.end())
            throw CatalogError("duplicate name '" + e.name + "' (first defined at line " +
                                   std::to_string(it->second) + ")",
                               line_no, 1);
        seen.emplace(e.name, line_no);

        std::string rest = trim(line.substr(colon + 1));
        // split off ;-separated key=value fields after the tuple
        std::size_t close = rest.find(')');
        if (rest.empty() || rest[0] != '(' || close == std::string::npos)
            throw CatalogError("expected '(tuple)' after the name", line_no,
                               static_cast<int>(colon) + 2);
        e.tuple_text = rest.substr(0, close + 1);
        std::string tail = trim(rest.substr(close + 1));

        while (!tail.empty()) {
            if (tail[0] != ';')
                throw CatalogError("expected ';' before key=value field", line_no, 1);
            tail = trim(tail.substr(1));
            auto next = tail.find(';');
            std::string field = trim(next == std::string::npos ? tail : tail.substr(0, next));
            tail = next == std::string::npos ? "" : trim(tail.substr(next));
            if (field.empty()) continue;
            auto eq = field.find('=');
            if (eq == std::string::npos)
                throw CatalogError("expected key=value, got '" + field + "'", line_no, 1);
            std::string key = trim(field.substr(0, eq));
            std::string val = trim(field.substr(eq + 1));
            if (key == "lattice_asserted") {
                e.lattice_asserted = parse_bool(val, line_no);
            } else if (key == "symplectic_expected") {
                e.symplectic_expected = parse_bool(val, line_no);
            } else if (key == "source") {
                e.source = val;
            } else if (key == "expected_betti") {
                e.expected_betti = parse_betti_list(val, line_no);
            } else if (key == "expected_verdict") {
                e.expected_verdict = parse_verdict(val, line_no);
            } else {
                throw CatalogError("unknown key '" + key + "'", line_no, 1);
            }
        }
        if ((e.expected_betti || e.expected_verdict) && e.source.empty())
            throw CatalogError("expected values require a source= provenance note", line_no, 1);

        // validate the tuple eagerly so grammar errors carry the line number
        try {
            (void)LieAlgebra::parse(e.tuple_text, e.name);
        } catch (const CatalogError& err) {
            throw err.at_line(line_no);
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CatalogEntry> parse_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogError("cannot open catalog file '" + path + "'", 0, 1);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

namespace {

EntryReport run_entry(const CatalogEntry& e, const RunOptions& opts) {
    EntryReport r;
    r.entry = e;
    auto t0 = std::chrono::steady_clock::now();
    try {
        LieAlgebra L = LieAlgebra::parse(e.tuple_text, e.name);
        r.dim = L.dim();
        if (!L.jacobi_ok()) {
            auto [i, j, k] = L.check_jacobi().front();
            r.error = "Jacobi identity fails, e.g. on the triple (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")";
            return r;
        }
        r.structure = L.structure_report();
        r.betti = betti(L);
        r.symplectic = find_symplectic(L, opts.symplectic);
        GroupProfile profile =
            profile_from_algebra(L, r.structure, r.symplectic, e.lattice_asserted, e.name);
        if (e.symplectic_expected && *e.symplectic_expected) profile.flags.symplectic_model = true;
        r.evidence = classify(profile);

        if (e.expected_betti && *e.expected_betti != r.betti) {
            std::string got;
            for (std::size_t i = 0; i < r.betti.size(); ++i)
                got += (i ? "," : "") + std::to_string(r.betti[i]);
            r.mismatches.push_back("betti mismatch: expected per " +
                                   (e.source.empty() ? std::string("note") : e.source) + ", got (" +
                                   got + ")");
        }
        if (e.expected_verdict && *e.expected_verdict != r.symplectic.verdict)
            r.mismatches.push_back(std::string("verdict mismatch: expected ") +
                                   to_string(*e.expected_verdict) + ", got " +
                                   to_string(r.symplectic.verdict));
    } catch (const std::exception& ex) {
        r.error = ex.what();
    }
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    return r;
}

}  // namespace

Report run_catalog(const std::vector<CatalogEntry>& entries, const RunOptions& opts) {
    Report rep;
    rep.entries.resize(entries.size());
    const int jobs = std::max(1, opts.jobs);

    if (jobs == 1) {
        for (std::size_t i = 0; i < entries.size(); ++i)
            rep.entries[i] = run_entry(entries[i], opts);
    } else {
        std::size_t next = 0;
        while (next < entries.size()) {
            std::vector<std::pair<std::size_t, std::future<EntryReport>>> batch;
            for (int j = 0; j < jobs && next < entries.size(); ++j, ++next)
                batch.emplace_back(next, std::async(std::launch::async, run_entry,
                                                    std::cref(entries[next]), std::cref(opts)));
            for (auto& [idx, fut] : batch) rep.entries[idx] = fut.get();
        }
    }
    for (const auto& e : rep.entries) {
        if (!e.error.empty()) ++rep.entries_failed;
        if (!e.mismatches.empty()) ++rep.expectation_mismatches;
    }
    return rep;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json structure_json(const StructureReport& s) {
    ordered_json j;
    j["jacobi_ok"] = s.jacobi_ok;
    j["nilpotent"] = s.nilpotent;
    if (s.nilpotent) j["nilpotency_class"] = s.nilpotency_class;
    j["solvable"] = s.solvable;
    if (s.solvable) j["derived_length"] = s.derived_length;
    j["completely_solvable"] = to_string(s.completely_solvable);
    j["unimodular"] = s.unimodular;
    return j;
}

ordered_json symplectic_json(const SymplecticReport& s) {
    ordered_json j;
    j["verdict"] = to_string(s.verdict);
    j["method"] = to_string(s.method);
    j["aspherical_note"] = s.aspherical_note;
    if (!s.reason.empty()) j["reason"] = s.reason;
    if (s.witness) j["witness"] = s.witness->to_string();
    if (s.top_power) j["top_power"] = s.top_power->to_string();
    return j;
}

ordered_json evidence_json(const ClassEvidence& ev) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : ev.verdicts) {
        ordered_json j;
        j["criterion"] = to_string(c.id);
        j["verdict"] = to_string(c.verdict);
        j["tag"] = to_string(c.tag);
        j["justification"] = c.justification;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

std::string machine_format(const Report& report) {
    std::string out;
    for (const auto& e : report.entries) {
        ordered_json j;
        j["name"] = e.entry.name;
        j["tuple"] = e.entry.tuple_text;
        if (!e.error.empty()) {
            j["error"] = e.error;
            out += j.dump() + "\n";
            continue;
        }
        j["dim"] = e.dim;
        j["structure"] = structure_json(e.structure);
        j["betti"] = e.betti;
        j["symplectic"] = symplectic_json(e.symplectic);
        j["criteria"] = evidence_json(e.evidence);
        if (!e.evidence.notes.empty()) j["notes"] = e.evidence.notes;
        j["expectation_ok"] = e.mismatches.empty();
        if (!e.mismatches.empty()) j["mismatches"] = e.mismatches;
        out += j.dump() + "\n";
    }
    ordered_json summary;
    summary["summary"] = {{"entries", report.entries.size()},
                          {"entry_errors", report.entries_failed},
                          {"expectation_mismatches", report.expectation_mismatches}};
    out += summary.dump() + "\n";
    return out;
}

void text_format(const Report& report, std::ostream& out, bool with_witness) {
    for (const auto& e : report.entries) {
        out << e.entry.name << ": " << e.entry.tuple_text << "\n";
        if (!e.error.empty()) {
            out << "  ERROR: " << e.error << "\n";
            continue;
        }
        out << "  structure: " << (e.structure.nilpotent
                                       ? "nilpotent (class " +
                                             std::to_string(e.structure.nilpotency_class) + ")"
                                   : e.structure.solvable
                                       ? "solvable (derived length " +
                                             std::to_string(e.structure.derived_length) + ")"
                                       : "not solvable")
            << ", completely_solvable=" << to_string(e.structure.completely_solvable)
            << (e.structure.unimodular ? ", unimodular" : ", not unimodular") << "\n";
        out << "  betti: (";
        for (std::size_t i = 0; i < e.betti.size(); ++i) out << (i ? "," : "") << e.betti[i];
        out << ")\n";
        out << "  symplectic: " << to_string(e.symplectic.verdict) << " ["
            << to_string(e.symplectic.method) << "]";
        if (!e.symplectic.reason.empty()) out << " (" << e.symplectic.reason << ")";
        if (e.symplectic.aspherical_note) out << " aspherical_note";
        out << "\n";
        if (with_witness && e.symplectic.witness)
            out << "  witness: " << e.symplectic.witness->to_string() << "\n";
        for (const auto& c : e.evidence.verdicts)
            if (c.verdict == CriterionVerdict::Fired)
                out << "  fired " << to_string(c.id) << " [" << to_string(c.tag)
                    << "]: " << c.justification << "\n";
        for (const auto& n : e.evidence.notes) out << "  note: " << n << "\n";
        for (const auto& m : e.mismatches) out << "  MISMATCH: " << m << "\n";
        out << "  time: " << e.micros << " us\n";
    }
    out << "summary: " << report.entries.size() << " entries, " << report.entries_failed
        << " errors, " << report.expectation_mismatches << " expectation mismatches\n";
}

}  // namespace liecoh
