// wilfcheck: analyze single numerical semigroups, sweep all semigroups up to
// a genus bound under a configurable set of checks, and search for extremal
// coverage quotients. Exit codes: 0 all checks pass, 1 usage or I/O error,
// 2 a verified violation was found.

#include "wilf/bounds.hpp"
#include "wilf/enumeration.hpp"
#include "wilf/errors.hpp"
#include "wilf/factorization.hpp"
#include "wilf/report.hpp"
#include "wilf/semigroup.hpp"
#include "wilf/subset_bound.hpp"
#include "wilf/types.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace {

using wilf::Int;
using wilf::Rational;
using ordered_json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

Int parse_int(std::string_view s, const char* what) {
    Int v = 0;
    const char* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || p != end)
        throw std::invalid_argument(std::string(what) + ": bad integer '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

int workers_from_env() {
    const char* v = std::getenv("WILFCHECK_WORKERS");
    if (!v) return 1;
    int w = 0;
    const std::string_view s(v);
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
    if (ec != std::errc{} || p != s.data() + s.size() || w < 1)
        throw std::invalid_argument("WILFCHECK_WORKERS must be a positive integer");
    return w;
}

ordered_json rational_json(const Rational& r) {
    return ordered_json::array({r.numerator(), r.denominator()});
}

// Structural record filter (--filter key=value, AND-composed).
struct Filter {
    std::optional<Int> e, m, genus, c;

    void add(std::string_view spec) {
        const auto eq = spec.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("--filter expects key=value, got '" + std::string(spec) +
                                        "'");
        const std::string_view key = spec.substr(0, eq);
        const Int value = parse_int(spec.substr(eq + 1), "--filter");
        if (key == "e")
            e = value;
        else if (key == "m")
            m = value;
        else if (key == "genus")
            genus = value;
        else if (key == "c")
            c = value;
        else
            throw std::invalid_argument("--filter key must be one of e, m, genus, c");
    }

    bool matches(const wilf::NumericalSemigroup& sg, Int node_genus) const {
        if (e && sg.embedding_dimension() != *e) return false;
        if (m && sg.multiplicity() != *m) return false;
        if (genus && node_genus != *genus) return false;
        if (c && sg.conductor() != *c) return false;
        return true;
    }
};

std::string render_record_text(const wilf::VerificationRecord& rec) {
    std::string out = "gens=";
    for (std::size_t i = 0; i < rec.generators.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(rec.generators[i]);
    }
    out += " m=" + std::to_string(rec.multiplicity);
    out += " e=" + std::to_string(rec.embedding_dimension);
    out += " c=" + std::to_string(rec.conductor);
    out += " c_prime=" + std::to_string(rec.c_prime);
    out += " genus=" + std::to_string(rec.genus);
    out += " type=" + std::to_string(rec.type);
    if (rec.degenerate) {
        out += " degenerate=1";
    } else {
        out += " wilf=" + wilf::to_string(*rec.wilf_quotient);
        out += " thm1=" + wilf::to_string(*rec.thm1_bound);
    }
    out += std::string(" wilf_ok=") + (rec.wilf_ok ? "1" : "0");
    out += std::string(" thm1_ok=") + (rec.thm1_ok ? "1" : "0");
    out += std::string(" type_ok=") + (rec.type_ok ? "1" : "0");
    out += std::string(" apery_ok=") + (rec.apery_ok ? "1" : "0");
    out += std::string(" downset_ok=") + (rec.downset_ok ? "1" : "0");
    out += std::string(" eq=") + (rec.is_equality ? "1" : "0");
    return out;
}

void render_summary_text(const wilf::SweepSummary& s, std::ostream& out) {
    out << "visited " << s.total_visited << " semigroups, genus <= " << s.genus_bound << "\n";
    out << "per genus:";
    for (long long n : s.per_genus) out << ' ' << n;
    out << "\nper embedding dimension:";
    for (const auto& [e, n] : s.per_embedding_dimension) out << ' ' << e << ':' << n;
    out << '\n';
    if (s.min_quotient) {
        const auto& w = *s.min_quotient;
        out << "min quotient " << wilf::to_string(w.quotient) << " at genus " << w.genus
            << ", generators";
        for (Int g : w.generators) out << ' ' << g;
        out << " (m/c " << wilf::to_string(w.mc_ratio) << ")\n";
        for (const auto& [e, we] : s.min_quotient_by_dimension)
            out << "  e=" << e << ": min quotient " << wilf::to_string(we.quotient) << " at genus "
                << we.genus << '\n';
    }
    long long total_violations = 0;
    for (const auto& [id, n] : s.violation_counts) total_violations += n;
    if (total_violations == 0) {
        out << "violations: none (checks:";
        for (const auto& [id, n] : s.violation_counts) out << ' ' << wilf::to_string(id);
        out << ")\n";
    } else {
        out << "violations:\n";
        for (const auto& [id, n] : s.violation_counts) {
            if (n == 0) continue;
            out << "  " << wilf::to_string(id) << ": " << n << '\n';
            const auto it = s.violation_witnesses.find(id);
            if (it == s.violation_witnesses.end()) continue;
            for (const auto& gens : it->second) {
                out << "    at";
                for (Int g : gens) out << ' ' << g;
                out << '\n';
            }
        }
    }
}

long long total_violations(const wilf::SweepSummary& s) {
    long long n = 0;
    for (const auto& [id, c] : s.violation_counts) n += c;
    return n;
}

// --- analyze ---------------------------------------------------------------

int run_analyze(const std::string& gens_arg, const std::string& format) {
    std::vector<Int> gens;
    for (std::string_view part : split(gens_arg, ','))
        gens.push_back(parse_int(part, "--gens"));
    const auto sg = wilf::NumericalSemigroup::from_generators(gens);
    const auto rec = wilf::make_record(sg);

    std::optional<wilf::SubsetBoundInstance> inst;
    std::optional<wilf::InequalityResult> ineq;
    std::vector<Int> pf;
    if (!rec.degenerate) {
        pf = sg.pseudo_frobenius().pseudo_frobenius;
        if (sg.embedding_dimension() >= 2) {
            inst = wilf::apery_factorization_set(sg);
            ineq = wilf::downset_inequality(*inst);
        }
    }

    if (format == "csv") {
        std::cout << wilf::csv_header() << '\n' << wilf::to_csv_row(rec) << '\n';
    } else if (format == "json") {
        ordered_json j = ordered_json::parse(wilf::to_json_line(rec));
        j["apery_set"] = sg.apery_set().entries;
        j["pseudo_frobenius"] = pf;
        if (inst) {
            ordered_json pts = ordered_json::array();
            for (const auto& p : inst->points) pts.push_back(p);
            j["factorization_set"] = std::move(pts);
            j["downset_lhs"] = ineq->lhs;
            j["downset_rhs"] = ineq->rhs;
        } else {
            j["factorization_set"] = nullptr;
            j["downset_lhs"] = nullptr;
            j["downset_rhs"] = nullptr;
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "generators:";
        for (Int g : rec.generators) std::cout << ' ' << g;
        std::cout << "\nmultiplicity " << rec.multiplicity << ", embedding dimension "
                  << rec.embedding_dimension << ", conductor " << rec.conductor << ", frobenius "
                  << rec.conductor - 1 << '\n';
        std::cout << "members below conductor " << rec.c_prime << ", genus " << rec.genus;
        if (rec.degenerate) {
            std::cout << "\ndegenerate (the full semigroup, no gaps); nothing to bound\n";
        } else {
            std::cout << ", type " << rec.type << '\n';
            std::cout << "apery set (mod " << rec.multiplicity << "):";
            for (Int a : sg.apery_set().entries) std::cout << ' ' << a;
            std::cout << "\npseudo-frobenius:";
            for (Int f : pf) std::cout << ' ' << f;
            std::cout << '\n';
            std::cout << "quotient c'/c = " << wilf::to_string(*rec.wilf_quotient)
                      << (rec.is_equality ? " (equality 1/e)" : "") << ", bound c'*e >= c "
                      << (rec.wilf_ok ? "holds" : "FAILS") << '\n';
            std::cout << "lower bound c/e - (m-1)(e-2)/(2e) = " << wilf::to_string(*rec.thm1_bound)
                      << ", c' >= bound " << (rec.thm1_ok ? "holds" : "FAILS") << '\n';
            std::cout << "type bound c'*(t+1) >= c " << (rec.type_ok ? "holds" : "FAILS") << '\n';
            if (inst) {
                std::cout << "factorization set: " << inst->points.size()
                          << " points, weights";
                for (Int w : inst->weights) std::cout << ' ' << w;
                std::cout << ", cap " << inst->cap << '\n';
                std::cout << "down-set inequality " << ineq->lhs << " >= " << ineq->rhs << ' '
                          << (ineq->holds ? "holds" : "FAILS")
                          << (ineq->equality ? " with equality" : "") << '\n';
            }
            std::cout << "apery invariants " << (rec.apery_ok ? "hold" : "FAIL")
                      << ", down-set bound " << (rec.downset_ok ? "holds" : "FAILS") << '\n';
        }
    }
    return rec.any_violation() ? kViolation : kPass;
}

// --- enumerate ---------------------------------------------------------------

struct EnumPayload {
    wilf::SweepSummary summary;
    std::vector<wilf::VerificationRecord> records;
};

int run_enumerate(Int g_max, const std::string& check_arg,
                  const std::vector<std::string>& filter_args, bool violations_only,
                  bool want_summary, const std::string& format, const std::string& out_path) {
    std::set<wilf::CheckId> checks;
    if (check_arg.empty()) {
        checks = wilf::all_checks();
    } else {
        for (std::string_view name : split(check_arg, ',')) {
            const auto id = wilf::check_id_from_string(name);
            if (!id) {
                std::string valid;
                for (wilf::CheckId c : wilf::all_checks()) {
                    if (!valid.empty()) valid += ", ";
                    valid += wilf::to_string(c);
                }
                throw std::invalid_argument("unknown check '" + std::string(name) +
                                            "' (valid: " + valid + ")");
            }
            checks.insert(*id);
        }
    }

    Filter filter;
    for (const std::string& f : filter_args) filter.add(f);

    wilf::SweepOptions opt;
    opt.traversal.workers = workers_from_env();

    EnumPayload acc = wilf::tree_reduce<EnumPayload>(
        g_max, opt.traversal,
        [&](const wilf::TreeNode& node) {
            EnumPayload p;
            p.summary = summarize_node(node, checks, opt);
            if (filter.matches(node.semigroup, node.genus)) {
                auto rec = make_record(node.semigroup);
                if (!violations_only || rec.any_violation()) p.records.push_back(std::move(rec));
            }
            return p;
        },
        EnumPayload{},
        [](EnumPayload& a, EnumPayload&& part) {
            merge_summaries(a.summary, std::move(part.summary));
            a.records.insert(a.records.end(), std::make_move_iterator(part.records.begin()),
                             std::make_move_iterator(part.records.end()));
        });
    acc.summary.genus_bound = g_max;
    acc.summary.per_genus.resize(static_cast<std::size_t>(g_max) + 1);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return kUsage;
        }
        out = &file;
    }

    // With --summary and no --out the records are suppressed: the summary is
    // the requested output and both would otherwise interleave on stdout.
    const bool emit_records = !out_path.empty() || !want_summary;
    if (emit_records) {
        if (format == "csv") *out << wilf::csv_header() << '\n';
        for (const auto& rec : acc.records) {
            if (format == "csv")
                *out << to_csv_row(rec) << '\n';
            else if (format == "json")
                *out << to_json_line(rec) << '\n';
            else
                *out << render_record_text(rec) << '\n';
        }
        out->flush();
        if (out->fail()) {
            std::cerr << "error: write failed" << (out_path.empty() ? "" : " on '" + out_path + "'")
                      << '\n';
            return kUsage;
        }
    }

    if (want_summary) render_summary_text(acc.summary, std::cout);
    return total_violations(acc.summary) > 0 ? kViolation : kPass;
}

// --- extremal ---------------------------------------------------------------

int run_extremal(Int k, Int min_multiplicity, Int g_max, const std::string& format) {
    if (k < 2) throw std::invalid_argument("--k must be at least 2");
    if (min_multiplicity < 0) throw std::invalid_argument("--min-multiplicity must be >= 0");

    wilf::SweepOptions opt;
    opt.traversal.workers = workers_from_env();

    const auto result = wilf::empirical_F(min_multiplicity, k, g_max, opt);

    if (!result) {
        if (format == "json") {
            ordered_json j;
            j["k"] = k;
            j["min_multiplicity"] = min_multiplicity;
            j["max_genus"] = g_max;
            j["no_instance"] = true;
            std::cout << j.dump() << '\n';
        } else if (format == "csv") {
            std::cout << "no_instance,1\n";
        } else {
            std::cout << "no instance: no semigroup with e = " << k << " and m > "
                      << min_multiplicity << " up to genus " << g_max << '\n';
        }
        return kPass;
    }

    const auto trend = wilf::min_quotient_trend(k, g_max, opt);
    const auto& w = result->witness;

    if (format == "json") {
        ordered_json j;
        j["k"] = k;
        j["min_multiplicity"] = min_multiplicity;
        j["max_genus"] = g_max;
        j["no_instance"] = false;
        j["quotient"] = rational_json(w.quotient);
        j["witness_generators"] = w.generators;
        j["witness_genus"] = w.genus;
        j["witness_mc"] = rational_json(w.mc_ratio);
        j["distance_to_floor"] = rational_json(result->distance_to_floor);
        ordered_json rows = ordered_json::array();
        for (const auto& row : trend) {
            ordered_json r;
            r["genus"] = row.genus;
            r["min_quotient"] = rational_json(row.min_quotient);
            r["witness_mc"] = rational_json(row.witness_mc);
            rows.push_back(std::move(r));
        }
        j["trend"] = std::move(rows);
        std::cout << j.dump() << '\n';
    } else if (format == "csv") {
        std::cout << "genus,quotient_num,quotient_den,mc_num,mc_den\n";
        for (const auto& row : trend)
            std::cout << row.genus << ',' << row.min_quotient.numerator() << ','
                      << row.min_quotient.denominator() << ',' << row.witness_mc.numerator() << ','
                      << row.witness_mc.denominator() << '\n';
    } else {
        std::cout << "min quotient " << wilf::to_string(w.quotient) << " for e = " << k << ", m > "
                  << min_multiplicity << ", genus <= " << g_max << '\n';
        std::cout << "witness: generators";
        for (Int g : w.generators) std::cout << ' ' << g;
        std::cout << ", genus " << w.genus << ", m/c " << wilf::to_string(w.mc_ratio) << '\n';
        std::cout << "distance to 1/" << k << ": " << wilf::to_string(result->distance_to_floor) << '\n';
        std::cout << "running minimum by genus:\n";
        for (const auto& row : trend)
            std::cout << "  genus " << row.genus << ": " << wilf::to_string(row.min_quotient) << " (m/c "
                      << wilf::to_string(row.witness_mc) << ")\n";
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup bound verification"};
    app.require_subcommand(1);

    std::string gens_arg, format_a = "text";
    CLI::App* analyze = app.add_subcommand("analyze", "check one semigroup from its generators");
    analyze->add_option("--gens", gens_arg, "comma-separated generators, e.g. 5,7,9")->required();
    analyze->add_option("--format", format_a, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    Int g_max_e = 0;
    std::string check_arg, format_e = "csv", out_path;
    std::vector<std::string> filter_args;
    bool violations_only = false, want_summary = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "sweep all semigroups up to a genus");
    enumerate->add_option("--max-genus", g_max_e, "largest genus to visit")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--check", check_arg,
                          "comma-separated checks to run (default: all)");
    enumerate->add_option("--filter", filter_args, "emit only records with key=value (e,m,genus,c)");
    enumerate->add_flag("--violations-only", violations_only, "emit only failing records");
    enumerate->add_flag("--summary", want_summary, "print sweep summary to stdout");
    enumerate->add_option("--format", format_e, "record format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    enumerate->add_option("--out", out_path, "write records to this file instead of stdout");

    Int k = 0, min_multiplicity = 0, g_max_x = 0;
    std::string format_x = "text";
    CLI::App* extremal = app.add_subcommand("extremal", "minimum quotient c'/c at fixed e");
    extremal->add_option("--k", k, "embedding dimension")->required();
    extremal->add_option("--min-multiplicity", min_multiplicity,
                         "require multiplicity strictly above this");
    extremal->add_option("--max-genus", g_max_x, "largest genus to search")
        ->required()
        ->check(CLI::NonNegativeNumber);
    extremal->add_option("--format", format_x, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_analyze(gens_arg, format_a);
        if (enumerate->parsed())
            return run_enumerate(g_max_e, check_arg, filter_args, violations_only, want_summary,
                                 format_e, out_path);
        return run_extremal(k, min_multiplicity, g_max_x, format_x);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
