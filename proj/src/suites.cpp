#include "macq/suites.hpp"

#include <functional>
#include <stdexcept>

#include "macq/daha.hpp"
#include "macq/indexops.hpp"
#include "macq/intertwiner.hpp"
#include "macq/macops.hpp"
#include "macq/rng.hpp"

namespace macq {

namespace {

std::string at(const Signature& lam) { return "lam=" + format_signature(lam); }
std::string at(const Signature& lam, const Signature& mu) { return at(lam) + " mu=" + format_signature(mu); }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

Report qfield_axioms(const SuiteOptions& opt) {
    Report r;
    Rng rng(opt.seed);
    for (int s = 0; s < opt.samples; ++s) {
        CoeffRat x = random_rat(rng), y = random_rat(rng), z = random_rat(rng);
        std::string d = "sample " + std::to_string(s);
        r.record("distributive", (x + y) * z == x * z + y * z, d);
        r.record("commutative", x + y == y + x && x * y == y * x, d);
        r.record("associative", (x * y) * z == x * (y * z) && (x + y) + z == x + (y + z), d);
        r.record("inverse", (x - x).is_zero() && (x.is_zero() || (x / x).is_one()), d);
        CoeffRat u = x * y;
        r.record("canonical", u.num() * x.den() * y.den() == x.num() * y.num() * u.den(), d);
        int a = rng.uniform(-6, 6);
        r.record("qnum-recursion", qnum(a) * qnum(2) == qnum(a + 1) + qnum(a - 1), d);
    }
    return r;
}

Report macops_eigen(const SuiteOptions& opt) {
    Report r;
    MacParams params;
    for (const auto& lam : signatures_up_to(opt.n, opt.maxdeg)) {
        SymLaurent p = macdonald_eigen(lam, opt.n, params);
        r.record("monic", p.coeff(lam).is_one(), at(lam));
        for (int order = 0; order <= opt.n; ++order)
            r.record("eigen", mac_apply(p, order, params) == p * mac_eigenvalue(lam, order, params),
                     at(lam) + " r=" + std::to_string(order));
    }
    return r;
}

Report constructor_agreement(const SuiteOptions& opt) {
    Report r;
    for (const auto& lam : signatures_up_to(opt.n, opt.maxdeg)) {
        SymLaurent e = macdonald_eigen(lam, opt.n);
        r.record("eigen=branch", e == macdonald_branch(lam, opt.n), at(lam));
        r.record("eigen=gt", e == macdonald_gt(lam, opt.n), at(lam));
    }
    return r;
}

Report symmetry(const SuiteOptions& opt) {
    Report r;
    auto sigs = signatures_up_to(opt.n, opt.maxdeg);
    for (const auto& lam : sigs)
        for (const auto& mu : sigs) {
            auto [lhs, rhs] = symmetry_check(lam, mu, opt.k);
            r.record("symmetry", lhs == rhs, at(lam, mu));
        }
    return r;
}

Report adjoint(const SuiteOptions& opt) {
    require(opt.n >= 2, "adjoint needs n >= 2");
    Report r;
    Rng rng(opt.seed);
    int dim = opt.n - 1;
    for (int s = 0; s < opt.samples; ++s) {
        Box b;
        for (int i = 0; i < dim; ++i) {
            b.lower.push_back(10 * (dim - 1 - i) + rng.uniform(-2, 0));
            b.upper.push_back(b.lower.back() + rng.uniform(0, 2));
        }
        std::vector<int> rseq;
        for (int i = 0; i < opt.l; ++i) rseq.push_back(rng.uniform(0, dim));
        IndexFn f = adapted_sample(rng, b, opt.l);
        IndexFn g = laurent_sample(rng, dim);
        r.record("adapted", is_adapted(f, b, opt.l), "sample " + std::to_string(s));
        r.record("summation-by-parts", verify_adjoint(f, g, b, rseq, opt.k), "sample " + std::to_string(s));
    }
    return r;
}

std::vector<std::pair<std::string, DahaParams>> daha_params(const SuiteOptions& opt) {
    return {{"generic", DahaParams{}}, {"specialized", DahaParams{UnitMono::q(-opt.l), UnitMono::q()}}};
}

Report daha_relations(const SuiteOptions& opt) {
    Report r;
    for (const auto& [label, p] : daha_params(opt)) r.merge(verify_relations(opt.n, p, opt.seed, opt.samples), label + "/");
    return r;
}

Report spherical_macdonald(const SuiteOptions& opt) {
    Report r;
    for (const auto& [label, p] : daha_params(opt))
        for (int s = 0; s < opt.samples; ++s) {
            SymLaurent f = random_sym(opt.n, opt.seed + s, 2, -1, 2);
            std::string d = "sample " + std::to_string(s);
            MacParams mp{p.qhalf.pow(2), p.thalf};
            for (int order = 0; order <= opt.n; ++order)
                r.record(label + "/e_r(Y)=D^r", e_r_Y_apply(f, order, p) == mac_apply(f, order, mp),
                         d + " r=" + std::to_string(order));
            r.record(label + "/p1(Y^-1)", p1_Yinv_apply(f, p) == p1_Yinv_apply_via_Y(f, p), d);
        }
    return r;
}

Report res_intertwine(const SuiteOptions& opt) { return verify_res_intertwine(opt.n, opt.l, opt.seed, opt.samples); }

Report res_diff(const SuiteOptions& opt) { return verify_res_diff(opt.n, opt.l, opt.seed, opt.samples); }

Report matelt_routes(const SuiteOptions& opt) {
    require(opt.n >= 2, "matelt-routes needs n >= 2");
    Report r;
    for (const auto& lam : signatures_up_to(opt.n, opt.maxdeg))
        for (const auto& mu : window_enumerate(lam, opt.k)) {
            CoeffRat c = mat_elt(mu, lam, opt.k);
            r.record("mat_elt=diag_sum", c == diag_coeff_sum(mu, lam, opt.k), at(lam, mu));
            r.record("mat_elt^2=cg_chain", c * c == c_squared_chain(mu, lam, opt.k), at(lam, mu));
            if (!is_dominant(mu)) r.record("non-dominant-zero", c.is_zero(), at(lam, mu));
        }
    return r;
}

Report branch(const SuiteOptions& opt) {
    Report r;
    for (const auto& lam : signatures_up_to(opt.n, opt.maxdeg)) {
        r.record("branching-identity", branch_at_k(lam, opt.k) == macdonald_at_k(lam, opt.k), at(lam));
        for (const auto& mu : window_enumerate(lam, 1)) {
            CoeffRat generic = subst(psi_branch(lam, mu), UnitMono::q(2), UnitMono::q(2 * opt.k));
            r.record("psi_qnum=psi_branch", psi_qnum(lam, mu, opt.k) == generic, at(lam, mu));
        }
    }
    return r;
}

Report trace(const SuiteOptions& opt) {
    Report r;
    NPoly den = ek_denominator(opt.n, opt.k);
    r.record("trivial=denominator", trace_reconstruct(Signature(opt.n, 0), opt.k) == den);
    for (const auto& lam : signatures_up_to(opt.n, opt.maxdeg))
        r.record("trace=P*denominator",
                 trace_reconstruct(lam, opt.k) == NPoly::from_sym(macdonald_at_k(lam, opt.k)) * den, at(lam));
    return r;
}

struct Entry {
    SuiteInfo info;
    std::function<Report(const SuiteOptions&)> run;
    std::vector<std::string> params;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list{
        {{"qfield-axioms", "field axioms and canonical form of Q(q,t) on random samples"}, qfield_axioms,
         {"samples", "seed"}},
        {{"macops-eigen", "P_lam is monic and D^r P_lam = e_r(q^{2lam} t^{2rho}) P_lam"}, macops_eigen,
         {"n", "maxdeg"}},
        {{"constructor-agreement", "eigen, branching and Gelfand-Tsetlin constructions of P_lam coincide"},
         constructor_agreement, {"n", "maxdeg"}},
        {{"symmetry", "evaluation symmetry of P_lam(q^2, q^{2k}) at shifted points"}, symmetry,
         {"n", "k", "maxdeg"}},
        {{"adjoint", "summation by parts for the index-side tilde and dagger operators"}, adjoint,
         {"n", "l", "k", "samples", "seed"}},
        {{"daha-relations", "defining relations of the polynomial representation of the DAHA"}, daha_relations,
         {"n", "l", "samples", "seed"}},
        {{"spherical-macdonald", "e_r(Y) and p_1(Y^{-1}) on symmetric functions are the Macdonald operators"},
         spherical_macdonald, {"n", "l", "samples", "seed"}},
        {{"res-intertwine", "the restriction map intertwines the Macdonald operators"}, res_intertwine,
         {"n", "l", "samples", "seed"}},
        {{"res-diff", "restriction of the nl-variable generator equals a product of n-variable generators"},
         res_diff, {"n", "l", "samples", "seed"}},
        {{"matelt-routes", "intertwiner matrix element by difference operators, explicit sum and Clebsch-Gordan"},
         matelt_routes, {"n", "k", "maxdeg"}},
        {{"branch", "branching rule at t = q^k and the psi coefficient"}, branch, {"n", "k", "maxdeg"}},
        {{"trace", "trace reconstruction equals P_lam times the denominator"}, trace, {"n", "k", "maxdeg"}},
    };
    return list;
}

}  // namespace

std::vector<Signature> signatures_up_to(int n, int maxdeg) {
    std::vector<Signature> out;
    for (int m = 0; m <= maxdeg; ++m)
        for (auto& lam : dominant_with_sum(n, m, 0, m)) out.push_back(std::move(lam));
    return out;
}

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> list = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return list;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
    require(opt.n >= 1 && opt.l >= 1 && opt.k >= 1 && opt.maxdeg >= 0 && opt.samples >= 1,
            "suite options must satisfy n, l, k, samples >= 1 and maxdeg >= 0");
    for (const auto& e : entries()) {
        if (e.info.name != name) continue;
        Report r = e.run(opt);
        r.suite = name;
        for (const auto& key : e.params) {
            if (key == "n") r.params["n"] = opt.n;
            if (key == "l") r.params["l"] = opt.l;
            if (key == "k") r.params["k"] = opt.k;
            if (key == "maxdeg") r.params["maxdeg"] = opt.maxdeg;
            if (key == "samples") r.params["samples"] = opt.samples;
            if (key == "seed") r.params["seed"] = opt.seed;
        }
        return r;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace macq
