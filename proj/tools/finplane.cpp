// finplane: command-line front end.
//
// Artifacts go to files; stdout carries a short summary. Exit status is 0 on
// success, 1 when a construction or verification fails, 2 on usage errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "finplane/finplane.hpp"

using namespace finplane;
namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Model parse_model(const std::string& s) {
    if (s == "pg" || s == "PG") return Model::PG;
    if (s == "ag" || s == "AG") return Model::AG;
    throw UsageError("plane must be pg or ag, got '" + s + "'");
}

// "pg:3", "ag:4" or a path to a plane file
struct PlaneArg {
    std::optional<DesarguesianPlane> coords;
    std::optional<GenericPlane> generic;

    const GenericPlane& as_generic() {
        if (!generic) generic = GenericPlane::from(*coords);
        return *generic;
    }
};

PlaneArg parse_plane(const std::string& s) {
    PlaneArg out;
    const auto colon = s.find(':');
    if (colon != std::string::npos && (s.substr(0, colon) == "pg" || s.substr(0, colon) == "ag")) {
        out.coords.emplace(Field::of_order(std::stoull(s.substr(colon + 1))), parse_model(s.substr(0, colon)));
    } else {
        out.generic = load_plane(s);
        const auto rep = check_plane_axioms(*out.generic);
        if (!rep.ok) throw SchemaError("plane file fails the axioms: " + rep.violations.front());
    }
    return out;
}

GraphSpec parse_graph(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("graph must look like cycle:7, wheel:4 or gear:3");
    const std::string kind = s.substr(0, colon);
    const auto n = static_cast<std::int32_t>(std::stol(s.substr(colon + 1)));
    if (kind == "cycle") return GraphSpec::cycle(n);
    if (kind == "wheel") return GraphSpec::wheel(n);
    if (kind == "gear") return GraphSpec::gear(n);
    throw UsageError("unknown graph kind '" + kind + "'");
}

void write_embedding(const Embedding& e, const DesarguesianPlane* coords, const std::string& path) {
    if (path.empty()) return;
    save_json(embedding_to_json(e, coords), path);
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << text;
}

// ---- field ----

int run_field(std::uint64_t q) {
    const Field f = Field::of_order(q);
    nlohmann::ordered_json j;
    j["q"] = f.order();
    j["p"] = f.characteristic();
    j["a"] = f.degree();
    j["modulus"] = f.modulus();
    j["first_primitive"] = f.first_primitive().value;
    std::cout << j.dump() << '\n';
    return 0;
}

// ---- plane ----

int run_plane(std::uint64_t q, const std::string& model, const std::string& out) {
    const DesarguesianPlane plane(Field::of_order(q), parse_model(model));
    const auto g = GenericPlane::from(plane);
    const auto rep = check_plane_axioms(g);
    if (!out.empty()) save_plane(g, out);
    std::cout << model_name(plane.model()) << "(2," << q << "): " << g.num_points() << " points, " << g.num_lines()
              << " lines, axioms " << (rep.ok ? "ok" : "FAILED") << '\n';
    return rep.ok ? 0 : kExitFail;
}

int run_plane_check(const std::string& path) {
    const auto g = load_plane(path);
    const auto rep = check_plane_axioms(g);
    std::cout << path << ": order " << g.order() << ", " << (g.projective() ? "projective" : "affine") << ", "
              << (rep.ok ? "ok" : "FAILED") << '\n';
    for (const auto& v : rep.violations) std::cout << "  " << v << '\n';
    return rep.ok ? 0 : kExitFail;
}

// ---- cycles ----

int run_cycle(std::uint32_t q, std::int32_t k, const std::string& model, const std::string& out) {
    const Model m = parse_model(model);
    const CycleFactory cf(q);
    const auto r = m == Model::AG ? cf.ag_cycle(k) : cf.pg_cycle(k);
    const auto& plane = m == Model::AG ? cf.ag() : cf.pg();
    write_embedding(r.embedding, &plane, out);
    std::cout << "C_" << k << " in " << model_name(m) << "(2," << q << ") via " << route_name(r.route) << ": verified\n";
    return 0;
}

int run_cycle_sweep(std::uint32_t q, const std::string& model, const std::string& out_dir, unsigned jobs) {
    const Model m = parse_model(model);
    const CycleFactory cf(q);
    const auto& plane = m == Model::AG ? cf.ag() : cf.pg();
    std::vector<std::int32_t> ks;
    for (std::int32_t k = 3; k <= plane.num_points(); ++k) ks.push_back(k);

    struct Row {
        std::int32_t k = 0;
        std::string route;
        bool ok = false;
        std::string note;
    };
    if (!out_dir.empty()) fs::create_directories(out_dir);
    const auto rows = parallel_map(
        ks,
        [&](std::int32_t k) {
            Row row{k, "-", false, ""};
            try {
                const auto r = m == Model::AG ? cf.ag_cycle(k) : cf.pg_cycle(k);
                row.route = route_name(r.route);
                row.ok = verify_embedding(r.embedding, plane).passed();
                if (!out_dir.empty())
                    write_embedding(r.embedding, &plane, (fs::path(out_dir) / ("c" + std::to_string(k) + ".json")).string());
            } catch (const Error& e) {
                row.note = e.what();
            }
            return row;
        },
        jobs);

    std::size_t good = 0;
    std::cout << std::left << std::setw(6) << "k" << std::setw(16) << "route" << "verified\n";
    for (const auto& r : rows) {
        good += r.ok;
        std::cout << std::setw(6) << r.k << std::setw(16) << r.route << (r.ok ? "yes" : "NO " + r.note) << '\n';
    }
    std::cout << model_name(m) << "(2," << q << "): " << good << "/" << rows.size() << " cycles verified\n";
    return good == rows.size() ? 0 : kExitFail;
}

// ---- wheels and gears ----

template <class Build>
int run_hub(const std::string& what, std::uint32_t q, const std::string& plane_file, const std::string& out, Build build) {
    if (!plane_file.empty()) {
        const auto g = load_plane(plane_file);
        const auto e = build(g);
        write_embedding(e, nullptr, out);
        std::cout << what << " in " << plane_file << ": verified\n";
        return 0;
    }
    if (q == 0) throw UsageError("give --q or --plane-file");
    const auto pg = pg_from_field(q);
    const auto e = build(pg);
    write_embedding(e, &pg, out);
    std::cout << what << " in PG(2," << q << "): verified\n";
    return 0;
}

int run_gear_sweep(std::uint32_t q_min, std::uint32_t q_max, const std::string& out, unsigned jobs) {
    std::vector<std::pair<std::uint32_t, std::int32_t>> cells;
    for (auto q : prime_powers_in(q_min, q_max))
        for (std::int32_t n = 3; n <= static_cast<std::int32_t>(q) + 2; ++n) cells.emplace_back(static_cast<std::uint32_t>(q), n);
    const auto verdicts = parallel_map(
        cells,
        [](const std::pair<std::uint32_t, std::int32_t>& c) -> std::string {
            const auto pg = pg_from_field(c.first);
            try {
                const auto plan = gear_plan(pg, c.second);
                detail::hub_embedding(pg, GraphSpec::gear(c.second), plan);
                return route_name(plan.route);
            } catch (const ImpossibleDegree&) {
                return "impossible";
            } catch (const NoEmbedding&) {
                return "impossible";
            } catch (const Error&) {
                return "FAILED";
            }
        },
        jobs);

    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    bool ok = true;
    std::uint32_t current = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto [q, n] = cells[i];
        if (q != current) {
            std::cout << (current ? "\n" : "") << "q=" << std::setw(3) << q << ':';
            current = q;
        }
        std::cout << ' ' << n << '=' << verdicts[i];
        ok = ok && verdicts[i] != "FAILED";
        j.push_back({{"q", q}, {"n", n}, {"route", verdicts[i]}});
    }
    if (current) std::cout << '\n';
    if (!out.empty()) save_json(j, out);
    return ok ? 0 : kExitFail;
}

// ---- oracle and verify ----

int run_oracle(const std::string& graph, const std::string& plane_arg, std::uint64_t budget, const std::string& out) {
    const GraphSpec spec = parse_graph(graph);
    auto plane = parse_plane(plane_arg);
    const auto r = plane.coords ? exists_embedding(spec, *plane.coords, budget) : exists_embedding(spec, *plane.generic, budget);
    std::cout << status_name(r.status) << '\n';
    if (r.embedding) write_embedding(*r.embedding, plane.coords ? &*plane.coords : nullptr, out);
    return 0;
}

int run_verify(const std::string& path, const std::string& plane_file) {
    const Embedding e = embedding_from_json(load_json(path));
    VerifyReport rep;
    if (e.plane.model == "GENERIC") {
        if (plane_file.empty()) throw UsageError("GENERIC embeddings need --plane-file");
        const auto g = load_plane(plane_file);
        if (g.order() != e.plane.q) throw SchemaError("plane file has the wrong order");
        rep = verify_embedding(e, g);
    } else {
        const DesarguesianPlane p(Field::of_order(static_cast<std::uint64_t>(e.plane.q)),
                                  e.plane.model == "PG" ? Model::PG : Model::AG);
        rep = verify_embedding(e, p);
    }
    std::cout << path << ": " << e.graph.name() << " in " << e.plane.model << "(2," << e.plane.q << ") "
              << (rep.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& v : rep.violations) std::cout << "  " << v << '\n';
    return rep.passed() ? 0 : kExitFail;
}

// ---- Hypothesis J ----

int run_hypj_search(std::uint32_t q) {
    std::cout << certificate_to_json(hypothesis_j_search(q)).dump() << '\n';
    return 0;
}

int run_hypj_sweep(std::uint64_t lo, std::uint64_t hi, unsigned jobs, bool primes_only, const std::string& out) {
    const auto rs = hypj_sweep(lo, hi, jobs, primes_only);
    if (!out.empty()) write_text(certificates_jsonl(rs), out);
    std::size_t found = 0, odd = 0, even = 0, brute = 0;
    std::string missing;
    for (const auto& r : rs) {
        if (const auto* c = std::get_if<HypothesisJCertificate>(&r)) {
            ++found;
            odd += c->route == CertificateRoute::OddGamma;
            even += c->route == CertificateRoute::EvenGolomb;
            brute += c->route == CertificateRoute::BruteSmall;
        } else {
            missing += (missing.empty() ? "" : ",") + std::to_string(std::get<NotFound>(r).q);
        }
    }
    std::cout << rs.size() << " prime powers in [" << lo << ", " << hi << "]: " << found << " certificates (" << odd
              << " ODD_GAMMA, " << even << " EVEN_GOLOMB, " << brute << " BRUTE_SMALL); not found: "
              << (missing.empty() ? "none" : missing) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycles, wheels and gears in finite planes"};
    app.require_subcommand(1);

    std::uint64_t q = 0;
    std::uint32_t q32 = 0;
    std::int32_t k = 0, n = 0;
    std::string model = "pg", out, out_dir, plane_file, graph, plane_arg, path;
    unsigned jobs = default_workers();
    std::uint64_t lo = 3, hi = 0, budget = kDefaultBudget;
    std::uint32_t q_min = 2, q_max = 16;
    bool primes_only = false;

    auto* field = app.add_subcommand("field", "Field parameters for GF(q)");
    field->add_option("--q", q, "Field order")->required();

    auto* plane = app.add_subcommand("plane", "Write or check an incidence plane");
    plane->require_subcommand(0, 1);
    plane->add_option("--q", q, "Plane order");
    plane->add_option("--model", model, "pg or ag");
    plane->add_option("--out", out, "Plane JSON output");
    auto* plane_check = plane->add_subcommand("check", "Check the axioms of a plane file");
    plane_check->add_option("file", path, "Plane JSON")->required();

    auto* cycle = app.add_subcommand("cycle", "Embed C_k in AG(2,q) or PG(2,q)");
    cycle->require_subcommand(0, 1);
    cycle->add_option("--q", q32, "Plane order");
    cycle->add_option("--k", k, "Cycle length");
    cycle->add_option("--plane", model, "pg or ag");
    cycle->add_option("--out", out, "Embedding JSON output");
    auto* cycle_sweep = cycle->add_subcommand("sweep", "Every k for one plane");
    cycle_sweep->add_option("--q", q32, "Plane order")->required();
    cycle_sweep->add_option("--plane", model, "pg or ag");
    cycle_sweep->add_option("--out-dir", out_dir, "Directory for c<k>.json files");
    cycle_sweep->add_option("--jobs", jobs, "Worker threads");

    auto* wheel_cmd = app.add_subcommand("wheel", "Embed W_n");
    wheel_cmd->add_option("--q", q32, "Order of PG(2,q)");
    wheel_cmd->add_option("--n", n, "Rim length")->required();
    wheel_cmd->add_option("--plane-file", plane_file, "Use a plane loaded from JSON instead");
    wheel_cmd->add_option("--out", out, "Embedding JSON output");

    auto* gear_cmd = app.add_subcommand("gear", "Embed G_n");
    gear_cmd->require_subcommand(0, 1);
    gear_cmd->add_option("--q", q32, "Order of PG(2,q)");
    gear_cmd->add_option("--n", n, "Number of spokes");
    gear_cmd->add_option("--plane-file", plane_file, "Use a plane loaded from JSON instead");
    gear_cmd->add_option("--out", out, "Embedding JSON output");
    auto* gear_sweep = gear_cmd->add_subcommand("sweep", "Coverage matrix q x n -> route");
    gear_sweep->add_option("--q-min", q_min, "Smallest order");
    gear_sweep->add_option("--q-max", q_max, "Largest order");
    gear_sweep->add_option("--out", out, "Matrix JSON output");
    gear_sweep->add_option("--jobs", jobs, "Worker threads");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive existence search");
    oracle_cmd->add_option("--graph", graph, "cycle:k, wheel:n or gear:n")->required();
    oracle_cmd->add_option("--plane", plane_arg, "pg:q, ag:q or a plane JSON file")->required();
    oracle_cmd->add_option("--budget", budget, "Node limit");
    oracle_cmd->add_option("--out", out, "Embedding JSON output when found");

    auto* verify = app.add_subcommand("verify", "Verify an embedding file");
    verify->add_option("file", path, "Embedding JSON")->required();
    verify->add_option("--plane-file", plane_file, "Plane JSON for GENERIC embeddings");

    auto* hypj = app.add_subcommand("hypj", "Hypothesis-J certificates");
    hypj->require_subcommand(1);
    auto* hypj_search = hypj->add_subcommand("search", "Certificate for one q");
    hypj_search->add_option("--q", q32, "Field order")->required();
    auto* hypj_sweep_cmd = hypj->add_subcommand("sweep", "Certificates for every prime power in a range");
    hypj_sweep_cmd->add_option("--min", lo, "Smallest q (at least 3)");
    hypj_sweep_cmd->add_option("--max", hi, "Largest q")->required();
    hypj_sweep_cmd->add_option("--jobs", jobs, "Worker threads");
    hypj_sweep_cmd->add_flag("--primes-only", primes_only, "Skip proper prime powers");
    hypj_sweep_cmd->add_option("--out", out, "JSON lines output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*field) return run_field(q);
        if (*plane) {
            if (*plane_check) return run_plane_check(path);
            if (q == 0) throw UsageError("plane needs --q");
            return run_plane(q, model, out);
        }
        if (*cycle) {
            if (*cycle_sweep) return run_cycle_sweep(q32, model, out_dir, jobs);
            if (q32 == 0 || k == 0) throw UsageError("cycle needs --q and --k");
            return run_cycle(q32, k, model, out);
        }
        if (*wheel_cmd)
            return run_hub("W_" + std::to_string(n), q32, plane_file, out, [&](const auto& p) { return wheel(p, n); });
        if (*gear_cmd) {
            if (*gear_sweep) return run_gear_sweep(q_min, q_max, out, jobs);
            if (n == 0) throw UsageError("gear needs --n");
            return run_hub("G_" + std::to_string(n), q32, plane_file, out, [&](const auto& p) { return gear(p, n); });
        }
        if (*oracle_cmd) return run_oracle(graph, plane_arg, budget, out);
        if (*verify) return run_verify(path, plane_file);
        if (*hypj) {
            if (*hypj_search) return run_hypj_search(q32);
            return run_hypj_sweep(lo, hi, jobs, primes_only, out);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SchemaError& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::logic_error& e) {  // std::stoul and friends
        std::cerr << "usage: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
