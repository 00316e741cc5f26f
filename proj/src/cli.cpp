#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>

#include "liecoh/catalog.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/errors.hpp"
#include "liecoh/generate.hpp"

namespace liecoh {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

std::vector<CatalogEntry> load_entries(const std::string& path, const std::string& only) {
    auto entries = parse_catalog_file(path);
    if (only.empty()) return entries;
    for (auto& e : entries)
        if (e.name == only) return {e};
    throw CatalogError("no entry named '" + only + "' in " + path, 0, 1);
}

int report_exit(const Report& rep) {
    if (rep.entries_failed > 0) return kExitInputError;
    if (rep.expectation_mismatches > 0) return kExitMismatch;
    return kExitOk;
}

int run_selftest(std::ostream& out) {
    std::mt19937_64 rng(20240901);
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        out << "  " << (ok ? "ok" : "FAIL") << "  " << what << "\n";
        if (!ok) ++failures;
    };

    // d^2 = 0 on random filtered algebras, every degree
    {
        bool ok = true;
        for (int trial = 0; trial < 25 && ok; ++trial) {
            LieAlgebra L = random_filtered_algebra(rng, 3 + static_cast<int>(rng() % 5));
            if (!L.jacobi_ok()) {
                ok = false;
                break;
            }
            for (int k = 0; k <= L.dim() && ok; ++k)
                for (const auto& lab : exterior_basis(L.dim(), k)) {
                    Form m = Form::monomial(L.dim(), lab, Rat(1));
                    if (!L.ce_differential(L.ce_differential(m)).is_zero()) {
                        ok = false;
                        break;
                    }
                }
        }
        check(ok, "differential squares to zero on random filtered algebras");
    }

    // duality + Euler characteristic on random nilpotent algebras
    {
        bool ok = true;
        for (int trial = 0; trial < 15 && ok; ++trial) {
            LieAlgebra L = random_filtered_algebra(rng, 3 + static_cast<int>(rng() % 4));
            auto b = betti(L);
            long chi = 0;
            for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * b[k];
            if (chi != 0) ok = false;
            for (std::size_t k = 0; k < b.size(); ++k)
                if (b[k] != b[b.size() - 1 - k]) ok = false;
        }
        check(ok, "Betti duality and zero Euler characteristic on nilpotent algebras");
    }

    // Kunneth: Betti numbers of a block sum convolve
    {
        bool ok = true;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            LieAlgebra a = random_filtered_algebra(rng, 2 + static_cast<int>(rng() % 3));
            LieAlgebra b = random_filtered_algebra(rng, 2 + static_cast<int>(rng() % 3));
            auto ba = betti(a), bb = betti(b), bs = betti(direct_sum(a, b));
            std::vector<long> conv(ba.size() + bb.size() - 1, 0);
            for (std::size_t i = 0; i < ba.size(); ++i)
                for (std::size_t j = 0; j < bb.size(); ++j) conv[i + j] += ba[i] * bb[j];
            if (conv != bs) ok = false;
        }
        check(ok, "Betti numbers of block sums are convolutions");
    }

    out << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariant-cohomology toolkit for Lie algebra models"};
    app.require_subcommand(1);

    std::string file, entry, format = "text";
    std::string product_a, product_b;
    int threshold = SymplecticOptions{}.expansion_threshold;
    int jobs = 1;
    bool witness = false;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("file", file, "catalog file")->required();
        cmd->add_option("--entry", entry, "restrict to one entry");
        cmd->add_option("--threshold", threshold,
                        "symbolic-expansion variable cap (default 12)");
        cmd->add_option("--jobs", jobs, "parallel entries");
        if (with_format)
            cmd->add_option("--format", format, "text|machine")
                ->check(CLI::IsMember({"text", "machine"}));
    };

    CLI::App* cmd_check = app.add_subcommand("check", "full per-entry reports");
    add_common(cmd_check, true);
    cmd_check->add_flag("--witness", witness, "print symplectic witnesses");

    CLI::App* cmd_betti = app.add_subcommand("betti", "Betti numbers only");
    add_common(cmd_betti, false);

    CLI::App* cmd_sympl = app.add_subcommand("symplectic", "symplectic verdicts");
    add_common(cmd_sympl, false);
    cmd_sympl->add_flag("--witness", witness, "print witnesses");

    CLI::App* cmd_classify = app.add_subcommand("classify", "class evidence");
    add_common(cmd_classify, false);

    CLI::App* cmd_product = app.add_subcommand("product", "Kunneth product of two entries");
    cmd_product->add_option("file", file, "catalog file")->required();
    cmd_product->add_option("entryA", product_a, "first entry")->required();
    cmd_product->add_option("entryB", product_b, "second entry")->required();
    cmd_product->add_option("--threshold", threshold, "symbolic-expansion variable cap");

    CLI::App* cmd_selftest = app.add_subcommand("selftest", "internal property suites");
    (void)cmd_selftest;

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n" << app.help();
        return kExitInputError;
    }

    RunOptions opts;
    opts.symplectic.expansion_threshold = threshold;
    opts.jobs = jobs;
    opts.with_witness = witness;

    try {
        if (app.got_subcommand(cmd_selftest)) return run_selftest(out);

        if (app.got_subcommand(cmd_product)) {
            auto entries = parse_catalog_file(file);
            const CatalogEntry* ea = nullptr;
            const CatalogEntry* eb = nullptr;
            for (const auto& e : entries) {
                if (e.name == product_a) ea = &e;
                if (e.name == product_b) eb = &e;
            }
            if (!ea || !eb) {
                err << "product: entries '" << product_a << "' and '" << product_b
                    << "' must both exist in " << file << "\n";
                return kExitInputError;
            }
            auto profile_of = [&](const CatalogEntry& e) {
                LieAlgebra L = LieAlgebra::parse(e.tuple_text, e.name);
                L.require_jacobi();
                auto structure = L.structure_report();
                auto sympl = find_symplectic(L, opts.symplectic);
                return profile_from_algebra(L, structure, sympl, e.lattice_asserted, e.name);
            };
            GroupProfile pa = profile_of(*ea), pb = profile_of(*eb);
            GroupProfile prod = kunneth(pa, pb);
            out << "product " << prod.source << "\n  betti: (";
            for (std::size_t i = 0; i < prod.betti.size(); ++i)
                out << (i ? "," : "") << prod.betti[i];
            out << ")\n";
            ClassEvidence ev = product_criteria(pa, pb);
            for (const auto& c : ev.verdicts)
                out << "  " << to_string(c.id) << ": " << to_string(c.verdict) << " ("
                    << c.justification << ")\n";
            for (const auto& n : ev.notes) out << "  note: " << n << "\n";
            return kExitOk;
        }

        auto entries = load_entries(file, entry);
        Report rep = run_catalog(entries, opts);

        if (app.got_subcommand(cmd_check)) {
            if (format == "machine")
                out << machine_format(rep);
            else
                text_format(rep, out, witness);
        } else if (app.got_subcommand(cmd_betti)) {
            for (const auto& e : rep.entries) {
                out << e.entry.name << ": ";
                if (!e.error.empty()) {
                    out << "ERROR " << e.error << "\n";
                    continue;
                }
                out << "(";
                for (std::size_t i = 0; i < e.betti.size(); ++i) out << (i ? "," : "") << e.betti[i];
                out << ")\n";
            }
        } else if (app.got_subcommand(cmd_sympl)) {
            for (const auto& e : rep.entries) {
                out << e.entry.name << ": ";
                if (!e.error.empty()) {
                    out << "ERROR " << e.error << "\n";
                    continue;
                }
                out << to_string(e.symplectic.verdict) << " [" << to_string(e.symplectic.method)
                    << "]";
                if (!e.symplectic.reason.empty()) out << " (" << e.symplectic.reason << ")";
                if (e.symplectic.aspherical_note) out << " aspherical_note";
                if (witness && e.symplectic.witness)
                    out << "\n  witness: " << e.symplectic.witness->to_string();
                out << "\n";
            }
        } else if (app.got_subcommand(cmd_classify)) {
            for (const auto& e : rep.entries) {
                out << e.entry.name << ":\n";
                if (!e.error.empty()) {
                    out << "  ERROR " << e.error << "\n";
                    continue;
                }
                for (const auto& c : e.evidence.verdicts)
                    out << "  " << to_string(c.id) << ": " << to_string(c.verdict) << " ["
                        << to_string(c.tag) << "] " << c.justification << "\n";
                for (const auto& n : e.evidence.notes) out << "  note: " << n << "\n";
            }
        }
        return report_exit(rep);
    } catch (const CatalogError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace liecoh
