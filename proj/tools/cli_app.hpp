#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "saxl/json_io.hpp"
#include "saxl/saxl.hpp"

namespace saxl::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

namespace detail {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Partition parse_partition_arg(const std::string& flag, const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const Error&) {
        throw Usage(flag + ": '" + text + "' is not a partition (expected e.g. 5,3,1,1)");
    }
}

inline std::string render_filling(const Filling& f) {
    std::ostringstream out;
    for (const auto& row : f.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i];
        out << '\n';
    }
    return out.str();
}

inline std::string render_edges(const Layer& layer) {
    std::ostringstream out;
    for (std::size_t e = 0; e < layer.size(); ++e) {
        out << (e ? " " : "") << '{';
        for (std::size_t i = 0; i < layer[e].size(); ++i)
            out << (i ? "," : "") << layer[e][i];
        out << '}';
    }
    return out.str();
}

inline std::string render_beta_grid(const DeltaGrid& grid) {
    std::ostringstream out;
    for (int r = 1; r <= grid.n(); ++r) {
        for (int c = 1; r + c <= grid.n() + 1; ++c)
            out << (c > 1 ? " " : "") << grid.beta(grid.id_at(r, c));
        out << '\n';
    }
    return out.str();
}

inline std::string render_hypergraph(const YoungHypergraph& h) {
    std::ostringstream out;
    out << "d = " << h.d << ", type (" << h.type[0].to_string() << " | " << h.type[1].to_string() << " | "
        << h.type[2].to_string() << ")\n";
    for (std::size_t k = 0; k < 3; ++k)
        out << "layer " << k + 1 << ": " << render_edges(h.layers[k]) << '\n';
    return out.str();
}

inline void render_certificate(std::ostream& out, const Certificate& c, int depth) {
    const std::string indent(2 * depth, ' ');
    out << indent << to_string(c.kind) << " (" << c.triple.lambda.to_string() << " | " << c.triple.mu.to_string()
        << " | " << c.triple.nu.to_string() << ")";
    if (c.kind == CertificateKind::constructive)
        out << " scalar " << c.scalar.str();
    if (c.kind == CertificateKind::oracle_leaf)
        out << " value " << c.scalar.str();
    out << '\n';
    if (c.kind == CertificateKind::constructive) {
        std::istringstream rows(render_filling(c.filling));
        for (std::string line; std::getline(rows, line);)
            out << indent << "  | " << line << '\n';
    }
    for (const auto& child : c.children)
        render_certificate(out, child, depth + 1);
}

inline std::string render_report(const SweepReport& r, bool timings) {
    std::ostringstream out;
    out << "n = " << r.n << ": total " << r.total << ", comparable " << r.comparable << ", certified "
        << r.certified << ", failures " << r.failures().size() << '\n';
    for (const auto& e : r.entries) {
        out << std::left << std::setw(24) << e.nu.to_string() << ' ' << std::setw(13)
            << (e.kind ? std::string(to_string(*e.kind)) : std::string("-")) << " kappa "
            << (e.kronecker >= 0 ? e.kronecker.str() : std::string("?"));
        if (timings)
            out << "  " << std::fixed << std::setprecision(3) << e.millis << " ms";
        if (!e.failure.empty())
            out << "  FAILED: " << e.failure;
        out << '\n';
    }
    return out.str();
}

} // namespace detail

/// Runs the command line. The emitted document goes to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 on a domain error, 2 on a usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
    CLI::App app{"Positivity certificates for Kronecker coefficients of the staircase tensor square", "saxl"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string output;
    std::optional<int> jobs_flag;
    int oracle_cap = default_oracle_cap;
    int max_brute_n = default_brute_n_cap;
    bool timings = false;
    auto add_common = [&](CLI::App* target) {
        target->add_option("--format", format, "Output format: json or text")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        target->add_option("-o,--output", output, "Write the document to this file instead of stdout");
        target->add_option("-j,--jobs", jobs_flag, "Worker threads for sweeps and brute force (env SAXL_JOBS)")
            ->check(CLI::Range(1, 1024));
        target->add_option("--oracle-cap", oracle_cap, "Largest d handled by the character oracle")
            ->check(CLI::Range(0, 120))
            ->capture_default_str();
        target->add_option("--max-brute-n", max_brute_n, "Largest n for brute-force tau sums")
            ->check(CLI::Range(1, 5))
            ->capture_default_str();
    };
    add_common(&app);

    std::string shape_text, content_text, nu_text, rho_text, in_path;
    std::vector<std::string> triple_text;
    int n = 0;
    bool brute = false, hook = false;

    auto* filling_cmd = app.add_subcommand("filling", "Semistandard filling of SHAPE with content CONTENT");
    filling_cmd->add_option("--shape", shape_text, "Shape partition, e.g. 5,3,1,1")->required();
    filling_cmd->add_option("--content", content_text, "Content partition, e.g. 4,3,2,1")->required();

    auto* hyper_cmd = app.add_subcommand("hypergraph", "Young hypergraph of type (rho(n), rho(n), NU)");
    hyper_cmd->add_option("--n", n, "Staircase order")->required()->check(CLI::PositiveNumber);
    hyper_cmd->add_option("--nu", nu_text, "Partition dominating rho(n)")->required();

    auto* contract_cmd = app.add_subcommand("contract", "Symmetrized contraction value for (n, NU)");
    contract_cmd->add_option("--n", n, "Staircase order")->required()->check(CLI::PositiveNumber);
    contract_cmd->add_option("--nu", nu_text, "Partition dominating rho(n)")->required();
    contract_cmd->add_flag("--brute", brute, "Also sum over every tau map and compare");

    auto* kron_cmd = app.add_subcommand("kron", "Kronecker coefficient of three partitions");
    kron_cmd->add_option("partitions", triple_text, "LAMBDA MU NU in text form, e.g. 2,1 2,1 3")
        ->required()
        ->expected(3)
        ->type_name("PARTITION");

    auto* decompose_cmd = app.add_subcommand("decompose", "Tensor square multiplicities of RHO");
    decompose_cmd->add_option("--rho", rho_text, "Partition")->required();

    auto* certify_cmd = app.add_subcommand("certify", "Positivity certificate for (rho(n), rho(n), NU)");
    certify_cmd->add_option("--n", n, "Staircase order")->required()->check(CLI::PositiveNumber);
    certify_cmd->add_option("--nu", nu_text, "Partition comparable to rho(n), or a hook with --hook")->required();
    certify_cmd->add_flag("--hook", hook, "Use the hook induction");

    auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate JSON document");
    verify_cmd->add_option("--in", in_path, "Certificate file; '-' or absent reads stdin");

    auto* hooks_cmd = app.add_subcommand("hooks", "Certify every hook of n(n+1)/2 boxes");
    hooks_cmd->add_option("--n", n, "Staircase order")->required()->check(CLI::PositiveNumber);
    hooks_cmd->add_flag("--timings", timings, "Include per-partition timings (not deterministic)");

    auto* theorem_cmd = app.add_subcommand("verify-theorem", "Certify every partition comparable to rho(n)");
    theorem_cmd->add_option("--n", n, "Staircase order")->required()->check(CLI::PositiveNumber);
    theorem_cmd->add_flag("--timings", timings, "Include per-partition timings (not deterministic)");

    for (auto* sub : {filling_cmd, hyper_cmd, contract_cmd, kron_cmd, decompose_cmd, certify_cmd, verify_cmd,
                      hooks_cmd, theorem_cmd})
        add_common(sub);

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i)
        args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const auto selected = app.get_subcommands();
        out << (selected.empty() ? app.help() : selected.front()->help());
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "saxl: " << e.what() << "\nRun with --help for usage.\n";
        return usage_error;
    }

    int jobs = 1;
    if (jobs_flag) {
        jobs = *jobs_flag;
    } else if (const char* env = std::getenv("SAXL_JOBS")) {
        try {
            jobs = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            err << "saxl: SAXL_JOBS='" << env << "' is not an integer\n";
            return usage_error;
        }
    }
    const bool text = format == "text";

    json::Json doc;
    std::string text_doc;
    int code = ok;
    try {
        if (app.got_subcommand(filling_cmd)) {
            const Partition shape = detail::parse_partition_arg("--shape", shape_text);
            const Partition gamma = detail::parse_partition_arg("--content", content_text);
            auto f = gale_ryser_filling(shape, gamma);
            if (!f)
                throw Error(ErrorCode::NotDominating,
                            shape.to_string() + " does not dominate " + gamma.to_string() + "; no semistandard filling");
            doc = {{"shape", json::to_json(shape)}, {"content", json::to_json(gamma)}, {"filling", json::to_json(*f)}};
            text_doc = detail::render_filling(*f);
        } else if (app.got_subcommand(hyper_cmd)) {
            const Partition nu = detail::parse_partition_arg("--nu", nu_text);
            const YoungHypergraph h = staircase_hypergraph(n, nu);
            doc = json::to_json(h);
            const DeltaGrid grid(n);
            text_doc = "beta values:\n" + detail::render_beta_grid(grid) + detail::render_hypergraph(h);
        } else if (app.got_subcommand(contract_cmd)) {
            const Partition nu = detail::parse_partition_arg("--nu", nu_text);
            const ExactScalar fast = symmetrized_contraction_fast(n, nu);
            doc = {{"n", n}, {"nu", json::to_json(nu)}, {"value", json::scalar_to_json(fast)}};
            text_doc = "value " + fast.str() + "\n";
            if (brute) {
                const ExactScalar sum = symmetrized_contraction_bruteforce(n, nu, max_brute_n, jobs);
                doc["brute_force"] = json::scalar_to_json(sum);
                doc["agree"] = sum == fast;
                text_doc += "brute force " + sum.str() + (sum == fast ? " (agrees)\n" : " (DISAGREES)\n");
                if (sum != fast)
                    code = domain_error;
            }
        } else if (app.got_subcommand(kron_cmd)) {
            const KroneckerOracle oracle(oracle_cap);
            const ExactScalar k =
                oracle.kronecker(detail::parse_partition_arg("kron", triple_text[0]),
                                 detail::parse_partition_arg("kron", triple_text[1]),
                                 detail::parse_partition_arg("kron", triple_text[2]));
            doc = {{"value", json::scalar_to_json(k)}};
            text_doc = k.str() + "\n";
        } else if (app.got_subcommand(decompose_cmd)) {
            const Partition rho = detail::parse_partition_arg("--rho", rho_text);
            const KroneckerOracle oracle(oracle_cap);
            const auto mult = oracle.tensor_square_decomposition(rho);
            json::Json m = json::Json::object();
            std::ostringstream t;
            for (const auto& nu : enumerate_partitions(rho.size(), std::max(rho.size(), default_enumeration_cap))) {
                m[nu.to_string()] = json::scalar_to_json(mult.at(nu));
                t << std::left << std::setw(24) << nu.to_string() << ' ' << mult.at(nu).str() << '\n';
            }
            doc = {{"rho", json::to_json(rho)}, {"multiplicities", m}};
            text_doc = t.str();
        } else if (app.got_subcommand(certify_cmd)) {
            const Partition nu = detail::parse_partition_arg("--nu", nu_text);
            const Certificate c = hook ? certify_hook(n, nu) : certify_comparable(n, nu);
            doc = json::to_json(c);
            std::ostringstream t;
            detail::render_certificate(t, c, 0);
            text_doc = t.str();
        } else if (app.got_subcommand(verify_cmd)) {
            std::string body;
            if (in_path.empty() || in_path == "-") {
                body.assign(std::istreambuf_iterator<char>(in), {});
            } else {
                std::ifstream file(in_path);
                if (!file)
                    throw detail::Usage("cannot open '" + in_path + "'");
                body.assign(std::istreambuf_iterator<char>(file), {});
            }
            json::Json parsed;
            try {
                parsed = json::Json::parse(body);
            } catch (const nlohmann::json::exception& e) {
                throw Error(ErrorCode::Parse, std::string("not JSON: ") + e.what());
            }
            VerifyOptions vo;
            vo.oracle_cap = oracle_cap;
            const VerifyResult r = verify(json::certificate_from_json(parsed), vo);
            doc = {{"ok", r.ok}, {"reasons", r.reasons}};
            text_doc = r.ok ? "certificate verified\n" : "certificate REJECTED\n";
            for (const auto& reason : r.reasons)
                text_doc += "  " + reason + "\n";
            if (!r.ok)
                code = domain_error;
        } else if (app.got_subcommand(hooks_cmd) || app.got_subcommand(theorem_cmd)) {
            SweepOptions so;
            so.jobs = jobs;
            so.oracle_cap = oracle_cap;
            so.timings = timings;
            const SweepReport r = app.got_subcommand(hooks_cmd) ? verify_hooks_all(n, so) : verify_theorem_all(n, so);
            doc = json::to_json(r, timings);
            text_doc = detail::render_report(r, timings);
            if (!r.failures().empty())
                code = domain_error;
        }
    } catch (const detail::Usage& e) {
        err << "saxl: " << e.what() << '\n';
        return usage_error;
    } catch (const Error& e) {
        err << "saxl: " << e.what() << '\n';
        return domain_error;
    }

    const std::string rendered = text ? text_doc : doc.dump(2) + "\n";
    if (output.empty()) {
        out << rendered;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            err << "saxl: cannot write '" << output << "'\n";
            return usage_error;
        }
        file << rendered;
    }
    return code;
}

} // namespace saxl::cli
