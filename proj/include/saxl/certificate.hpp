#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "saxl/contraction.hpp"
#include "saxl/error.hpp"
#include "saxl/hypergraph.hpp"
#include "saxl/kron_oracle.hpp"
#include "saxl/parallel.hpp"
#include "saxl/partition.hpp"
#include "saxl/tableau.hpp"

namespace saxl {

struct Triple {
    Partition lambda, mu, nu;

    friend bool operator==(const Triple&, const Triple&) = default;
};

inline Triple add(const Triple& x, const Triple& y) {
    return {add(x.lambda, y.lambda), add(x.mu, y.mu), add(x.nu, y.nu)};
}

enum class CertificateKind { constructive, transposed, semigroup, oracle_leaf };

inline std::string_view to_string(CertificateKind kind) {
    switch (kind) {
    case CertificateKind::constructive: return "constructive";
    case CertificateKind::transposed: return "transposed";
    case CertificateKind::semigroup: return "semigroup";
    case CertificateKind::oracle_leaf: return "oracle";
    }
    return "?";
}

/// Replayable evidence that a Kronecker coefficient is positive.
///
/// - constructive: n, filling, hypergraph and the nonzero contraction scalar
///   for triple (staircase(n), staircase(n), nu) with nu dominating.
/// - transposed: one child for (lambda, mu^T, nu^T); positivity carries over
///   because the coefficient is invariant under transposing two arguments.
/// - semigroup: two children whose triples add up partwise to this triple.
/// - oracle_leaf: a coefficient value taken from the character oracle.
struct Certificate {
    CertificateKind kind = CertificateKind::constructive;
    Triple triple;
    int n = 0;
    Filling filling;
    YoungHypergraph hypergraph;
    ExactScalar scalar; ///< contraction value (constructive) or coefficient (oracle_leaf)
    std::vector<Certificate> children;
};

namespace detail {

inline void require_staircase_size(int n, const Partition& nu) {
    if (n < 1)
        throw Error(ErrorCode::BadShape, "n must be >= 1");
    if (nu.size() != staircase_size(n))
        throw Error(ErrorCode::SizeMismatch,
                    nu.to_string() + " does not have " + std::to_string(staircase_size(n)) + " boxes");
}

inline Certificate constructive_certificate(int n, const Partition& nu) {
    const Partition rho = staircase(n);
    auto filling = gale_ryser_filling(nu, rho);
    if (!filling)
        throw Error(ErrorCode::NotDominating, nu.to_string() + " does not dominate " + rho.to_string());
    Certificate cert;
    cert.kind = CertificateKind::constructive;
    cert.triple = {rho, rho, nu};
    cert.n = n;
    cert.hypergraph = hypergraph_from_filling(n, *filling);
    cert.filling = std::move(*filling);
    cert.scalar = beta_term(n, cert.hypergraph);
    return cert;
}

} // namespace detail

/// Certificate for nu comparable to staircase(n). A nu that dominates (the
/// staircase itself included) gets a constructive node; a strictly dominated
/// nu is handled through its transpose.
inline Certificate certify_comparable(int n, const Partition& nu) {
    detail::require_staircase_size(n, nu);
    const Partition rho = staircase(n);
    if (dominates(nu, rho))
        return detail::constructive_certificate(n, nu);
    if (!dominates(rho, nu))
        throw Error(ErrorCode::NotComparable, nu.to_string() + " is not comparable to " + rho.to_string());
    Certificate cert;
    cert.kind = CertificateKind::transposed;
    cert.triple = {rho, rho, nu};
    cert.n = n;
    cert.children.push_back(detail::constructive_certificate(n, transpose(nu)));
    return cert;
}

inline Certificate oracle_leaf(const Triple& triple, ExactScalar value) {
    Certificate cert;
    cert.kind = CertificateKind::oracle_leaf;
    cert.triple = triple;
    cert.scalar = std::move(value);
    return cert;
}

/// Hook induction: hooks with at most n columns are dominated by the
/// staircase; wider hooks peel n boxes off the first row and combine the
/// smaller certificate with the column/column/row coefficient, which is 1.
inline Certificate certify_hook(int n, const Partition& nu) {
    detail::require_staircase_size(n, nu);
    const auto hook = as_hook(nu);
    if (!hook)
        throw Error(ErrorCode::NotAHook, nu.to_string() + " is not a hook");
    if (hook->row_len <= n)
        return certify_comparable(n, nu);

    const Partition rest = hook_partition(Hook{hook->row_len - n, hook->col_len});
    Certificate cert;
    cert.kind = CertificateKind::semigroup;
    cert.n = n;
    cert.children.push_back(certify_hook(n - 1, rest));
    // sign x sign = trivial
    cert.children.push_back(oracle_leaf({column_partition(n), column_partition(n), row_partition(n)}, 1));
    cert.triple = add(cert.children[0].triple, cert.children[1].triple);
    return cert;
}

struct VerifyOptions {
    int oracle_cap = default_oracle_cap;
    bool check_root_with_oracle = true;
};

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> reasons;

    explicit operator bool() const noexcept { return ok; }
};

namespace detail {

class Verifier {
public:
    explicit Verifier(const VerifyOptions& options) : options_(options), oracle_(options.oracle_cap) {}

    void run(const Certificate& cert, const std::string& path) {
        try {
            switch (cert.kind) {
            case CertificateKind::constructive: constructive(cert, path); break;
            case CertificateKind::transposed: transposed(cert, path); break;
            case CertificateKind::semigroup: semigroup(cert, path); break;
            case CertificateKind::oracle_leaf: leaf(cert, path); break;
            }
        } catch (const Error& e) {
            fail(path, e.what());
        }
    }

    void root_oracle(const Certificate& cert) {
        const Triple& t = cert.triple;
        if (t.lambda.size() != t.mu.size() || t.mu.size() != t.nu.size()) {
            fail("root", "triple sizes differ");
            return;
        }
        if (t.lambda.size() > options_.oracle_cap)
            return;
        try {
            ExactScalar k = oracle_.kronecker(t.lambda, t.mu, t.nu);
            if (k <= 0)
                fail("root", "oracle reports coefficient " + k.str());
        } catch (const Error& e) {
            fail("root", e.what());
        }
    }

    VerifyResult result;

private:
    void fail(const std::string& path, const std::string& why) {
        result.ok = false;
        result.reasons.push_back(path + ": " + why);
    }

    bool expect(bool cond, const std::string& path, const std::string& why) {
        if (!cond)
            fail(path, why);
        return cond;
    }

    void constructive(const Certificate& cert, const std::string& path) {
        if (!expect(cert.n >= 1, path, "n must be >= 1") || !expect(cert.children.empty(), path, "unexpected children"))
            return;
        const Partition rho = staircase(cert.n);
        const Partition& nu = cert.triple.nu;
        if (!expect(cert.triple.lambda == rho && cert.triple.mu == rho, path, "first two partitions must be " +
                                                                                 rho.to_string()) ||
            !expect(nu.size() == rho.size(), path, "nu has the wrong size") ||
            !expect(dominates(nu, rho), path, nu.to_string() + " does not dominate " + rho.to_string()))
            return;

        const Filling& f = cert.filling;
        if (!expect(f.shape() == nu, path, "filling shape differs from nu") ||
            !expect(is_semistandard(f), path, "filling is not semistandard") ||
            !expect(has_content(f, rho), path, "filling content is not " + rho.to_string()))
            return;

        const YoungHypergraph& h = cert.hypergraph;
        const DeltaGrid grid(cert.n);
        if (!expect(h.type == std::array<Partition, 3>{rho, rho, nu}, path, "hypergraph type differs from triple") ||
            !expect(validate(h), path, "hypergraph is not a Young hypergraph") ||
            !expect(h.layers[0] == grid_row_layer(grid), path, "layer 1 is not the grid rows") ||
            !expect(h.layers[1] == grid_column_layer(grid), path, "layer 2 is not the grid columns"))
            return;

        const auto betas = third_layer_betas(h, grid);
        if (!expect(static_cast<int>(betas.size()) == f.num_columns(), path, "layer 3 edge count differs"))
            return;
        for (int j = 0; j < f.num_columns(); ++j)
            if (!expect(betas[j] == f.column(j), path,
                        "layer 3 edge " + std::to_string(j + 1) + " does not match filling column"))
                return;

        if (!expect(cert.scalar != 0, path, "scalar is zero"))
            return;
        const ExactScalar replay = beta_term(cert.n, h);
        expect(replay == cert.scalar, path, "scalar " + cert.scalar.str() + " but replay gives " + replay.str());
    }

    void transposed(const Certificate& cert, const std::string& path) {
        if (!expect(cert.children.size() == 1, path, "transposed node needs one child"))
            return;
        const Certificate& inner = cert.children[0];
        const Triple& t = cert.triple;
        expect(t.lambda == inner.triple.lambda && t.mu == transpose(inner.triple.mu) &&
                   t.nu == transpose(inner.triple.nu),
               path, "triple is not the child's with the last two partitions transposed");
        run(inner, path + "/0");
    }

    void semigroup(const Certificate& cert, const std::string& path) {
        if (!expect(cert.children.size() == 2, path, "semigroup node needs two children"))
            return;
        expect(add(cert.children[0].triple, cert.children[1].triple) == cert.triple, path,
               "triple is not the partwise sum of the children's triples");
        run(cert.children[0], path + "/0");
        run(cert.children[1], path + "/1");
    }

    void leaf(const Certificate& cert, const std::string& path) {
        const Triple& t = cert.triple;
        if (!expect(cert.scalar > 0, path, "leaf value must be positive") ||
            !expect(t.lambda.size() <= options_.oracle_cap, path, "leaf beyond oracle cap cannot be confirmed"))
            return;
        ExactScalar k = oracle_.kronecker(t.lambda, t.mu, t.nu);
        expect(k == cert.scalar, path, "leaf value " + cert.scalar.str() + " but oracle gives " + k.str());
    }

    VerifyOptions options_;
    KroneckerOracle oracle_;
};

} // namespace detail

/// Replays every node and, when the root triple is within the oracle cap,
/// confirms the root coefficient is positive.
inline VerifyResult verify(const Certificate& cert, const VerifyOptions& options = {}) {
    detail::Verifier v(options);
    v.run(cert, "root");
    if (options.check_root_with_oracle)
        v.root_oracle(cert);
    return v.result;
}

struct SweepOptions {
    int jobs = 1;
    int oracle_cap = default_oracle_cap;
    int replay_cap = 5; ///< largest n whose certificates are fully replayed
    int sweep_cap = 6;  ///< largest n accepted at all
    bool timings = false;
};

struct SweepEntry {
    Partition nu;
    std::optional<CertificateKind> kind; ///< root kind when certified
    ExactScalar kronecker = -1;          ///< -1 when beyond the oracle cap
    double millis = 0;
    std::string failure; ///< empty on success
};

struct SweepReport {
    int n = 0;
    int total = 0;
    int comparable = 0;
    int certified = 0;
    std::vector<SweepEntry> entries; ///< sorted by partition text form
    std::vector<SweepEntry> failures() const {
        std::vector<SweepEntry> out;
        for (const auto& e : entries)
            if (!e.failure.empty())
                out.push_back(e);
        return out;
    }
};

namespace detail {

template <typename Certify>
SweepReport sweep(int n, const std::vector<Partition>& targets, int total, const SweepOptions& opt, Certify certify) {
    if (n < 1)
        throw Error(ErrorCode::BadShape, "n must be >= 1");
    if (n > opt.sweep_cap)
        throw Error(ErrorCode::CapExceeded,
                    "sweep for n = " + std::to_string(n) + " exceeds cap " + std::to_string(opt.sweep_cap));
    const Partition rho = staircase(n);
    const KroneckerOracle oracle(opt.oracle_cap);
    const bool use_oracle = rho.size() <= opt.oracle_cap;
    std::map<Partition, ExactScalar> decomposition;
    if (use_oracle)
        decomposition = oracle.tensor_square_decomposition(rho);

    std::vector<SweepEntry> entries(targets.size());
    parallel_for(targets.size(), opt.jobs, [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        SweepEntry& e = entries[i];
        e.nu = targets[i];
        try {
            Certificate cert = certify(n, e.nu);
            if (n <= opt.replay_cap) {
                VerifyOptions vo;
                vo.oracle_cap = opt.oracle_cap;
                vo.check_root_with_oracle = false; // the decomposition below covers it
                VerifyResult vr = verify(cert, vo);
                if (!vr.ok)
                    e.failure = vr.reasons.empty() ? "verification failed" : vr.reasons.front();
            } else if (cert.kind != CertificateKind::semigroup) {
                const Certificate& c = cert.kind == CertificateKind::transposed ? cert.children[0] : cert;
                if (c.scalar == 0)
                    e.failure = "zero scalar";
            }
            if (e.failure.empty())
                e.kind = cert.kind;
            if (use_oracle) {
                e.kronecker = decomposition.at(e.nu);
                if (e.kronecker <= 0 && e.failure.empty())
                    e.failure = "oracle reports coefficient " + e.kronecker.str();
            }
        } catch (const Error& err) {
            e.failure = err.what();
        }
        e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    });

    SweepReport report;
    report.n = n;
    report.total = total;
    for (const auto& e : entries) {
        if (comparable(e.nu, rho))
            ++report.comparable;
        if (e.failure.empty())
            ++report.certified;
    }
    std::sort(entries.begin(), entries.end(),
              [](const SweepEntry& a, const SweepEntry& b) { return a.nu.to_string() < b.nu.to_string(); });
    report.entries = std::move(entries);
    return report;
}

} // namespace detail

/// Certifies and cross-checks every partition of staircase_size(n) that is
/// comparable to the staircase.
inline SweepReport verify_theorem_all(int n, const SweepOptions& opt = {}) {
    if (n < 1 || n > opt.sweep_cap)
        throw Error(ErrorCode::CapExceeded, "sweep for n = " + std::to_string(n) + " outside 1.." +
                                                std::to_string(opt.sweep_cap));
    const Partition rho = staircase(n);
    const auto all = enumerate_partitions(rho.size());
    std::vector<Partition> targets;
    for (const auto& nu : all)
        if (comparable(nu, rho))
            targets.push_back(nu);
    return detail::sweep(n, targets, static_cast<int>(all.size()), opt, certify_comparable);
}

/// Certifies every hook of staircase_size(n) boxes through the hook induction.
/// `comparable` counts the hooks comparable to the staircase.
inline SweepReport verify_hooks_all(int n, const SweepOptions& opt = {}) {
    if (n < 1 || n > opt.sweep_cap)
        throw Error(ErrorCode::CapExceeded, "sweep for n = " + std::to_string(n) + " outside 1.." +
                                                std::to_string(opt.sweep_cap));
    const auto hooks = enumerate_hooks(staircase_size(n));
    return detail::sweep(n, hooks, static_cast<int>(hooks.size()), opt, certify_hook);
}

} // namespace saxl
