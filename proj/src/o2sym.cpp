#include "qgw/o2sym.hpp"

#include <numeric>

#include "qgw/corep.hpp"
#include "qgw/error.hpp"

namespace qgw {

namespace {

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

void bump(std::map<std::string, int>& m, const std::string& key, int by = 1) { m[key] += by; }

std::map<std::string, int> module_decomposition(const O2Subgroup& h, const InducingModule& w) {
    std::map<std::string, int> out;
    switch (w.kind) {
    case InducingModule::Kind::trivial:
        bump(out, h.kind == O2Subgroup::Kind::cyclic ? "chi0" : "triv");
        break;
    case InducingModule::Kind::character:
        bump(out, w.character);
        break;
    case InducingModule::Kind::m2:
        if (h.kind != O2Subgroup::Kind::dihedral) throw Error("BadParams", "o2sym", "M2 module needs a dihedral subgroup");
        if (w.l < 1 || (h.k != 0 && 2 * w.l > h.k)) throw Error("BadParams", "o2sym", "M2 parameter " + std::to_string(w.l));
        // Ad of the projective representation: 1 ⊕ det ⊕ V(l)
        out = branch(IrrO2::V(w.l), h);
        bump(out, "triv");
        bump(out, "sgn");
        break;
    }
    return out;
}

int pairing(const std::map<std::string, int>& a, const std::map<std::string, int>& b) {
    int s = 0;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it != b.end()) s += v * it->second;
    }
    return s;
}

std::string inducing_label(bool alpha, int k, int l) { return alpha ? o2_alpha_label(k) : o2_beta_label(k, l); }

MultVector label_vector(bool alpha, int k, int l, int cutoff) {
    if (alpha) return induced_mult({O2Subgroup::Kind::cyclic, k}, {}, cutoff);
    if (l == 0) return induced_mult({O2Subgroup::Kind::dihedral, k}, {}, cutoff);
    return induced_mult({O2Subgroup::Kind::dihedral, k}, {InducingModule::Kind::m2, {}, l}, cutoff);
}

} // namespace

IrrO2 IrrO2::V(int k) {
    if (k < 1) throw Error("BadParams", "o2sym", "V(" + std::to_string(k) + ")");
    return {Kind::V, k};
}

std::string IrrO2::label() const {
    switch (kind) {
    case Kind::triv:
        return "triv";
    case Kind::sgn:
        return "sgn";
    default:
        return "V(" + std::to_string(k) + ")";
    }
}

int MultVector::of(const IrrO2& r) const {
    switch (r.kind) {
    case IrrO2::Kind::triv:
        return triv;
    case IrrO2::Kind::sgn:
        return sgn;
    default:
        if (r.k > cutoff) throw Error("BeyondCutoff", "o2sym", r.label());
        return v[r.k - 1];
    }
}

std::string MultVector::str() const {
    std::string s = std::to_string(triv) + "," + std::to_string(sgn) + ";";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::map<std::string, int> branch(const IrrO2& irr, const O2Subgroup& t) {
    std::map<std::string, int> out;
    bool cyc = t.kind == O2Subgroup::Kind::cyclic;
    if (irr.kind != IrrO2::Kind::V) {
        bump(out, cyc ? "chi0" : irr.kind == IrrO2::Kind::triv ? "triv" : "sgn");
        return out;
    }
    int m = irr.k, k = t.k;
    if (cyc) {
        if (k == 0) {
            bump(out, "chi" + std::to_string(m));
            bump(out, "chi" + std::to_string(-m));
        } else {
            bump(out, "chi" + std::to_string(mod(m, k)));
            bump(out, "chi" + std::to_string(mod(-m, k)));
        }
        return out;
    }
    if (k == 0) {
        bump(out, "V" + std::to_string(m));
        return out;
    }
    int j = mod(m, k);
    if (j == 0) {
        bump(out, "triv");
        bump(out, "sgn");
    } else if (2 * j == k) {
        bump(out, "c-+");
        bump(out, "c--");
    } else {
        bump(out, "V" + std::to_string(std::min(j, k - j)));
    }
    return out;
}

MultVector induced_mult(const O2Subgroup& h, const InducingModule& w, int cutoff) {
    if (cutoff < 1) throw Error("BadParams", "o2sym", "cutoff " + std::to_string(cutoff));
    if (h.k < 0) throw Error("BadParams", "o2sym", "k " + std::to_string(h.k));
    auto wd = module_decomposition(h, w);
    MultVector mv;
    mv.cutoff = cutoff;
    mv.triv = pairing(branch(IrrO2::triv(), h), wd);
    mv.sgn = pairing(branch(IrrO2::sgn(), h), wd);
    for (int m = 1; m <= cutoff; ++m) mv.v.push_back(pairing(branch(IrrO2::V(m), h), wd));
    return mv;
}

MultVector regular_mult(int cutoff) {
    MultVector mv;
    mv.cutoff = cutoff;
    mv.triv = mv.sgn = 1;
    mv.v.assign(cutoff, 2);
    return mv;
}

std::string o2_alpha_label(int k) { return "alpha^(" + (k == 0 ? std::string("inf") : std::to_string(k)) + ")"; }

std::string o2_beta_label(int k, int l) {
    return "beta^(" + (k == 0 ? std::string("inf") : std::to_string(k)) + ")_" +
           (l == 0 ? std::string("0") : std::to_string(l) + "/2");
}

std::vector<std::string> scan_regular_candidates(int k_bound, int l_bound, int cutoff) {
    if (cutoff < 2 * k_bound)
        throw Error("CutoffTooSmall", "o2sym", "cutoff " + std::to_string(cutoff) + " < 2*" + std::to_string(k_bound));
    MultVector reg = regular_mult(cutoff);
    std::vector<std::string> out;
    for (int k = 1; k <= k_bound; ++k) {
        if (label_vector(true, k, 0, cutoff) == reg) out.push_back(o2_alpha_label(k));
        for (int l = 0; l <= l_bound && 2 * l <= k; ++l)
            if (label_vector(false, k, l, cutoff) == reg) out.push_back(o2_beta_label(k, l));
    }
    return out;
}

std::vector<EmbeddableVerdict> embeddable_table(int k_bound, int l_bound) {
    std::vector<EmbeddableVerdict> out;
    auto add = [&](bool alpha, int k, int l) {
        EmbeddableVerdict v;
        v.label = inducing_label(alpha, k, l);
        v.k = k;
        v.l = l;
        v.alpha = alpha;
        bool even_k = k == 0 || k % 2 == 0;
        if (!alpha && l > 0 && l % 2 == 0) {
            v.reason = "invariant-dimension";
        } else if (!even_k) {
            v.reason = "commutative-onto-W";
        } else {
            v.embeddable = true;
            v.reason = alpha || l == 0 ? "quotient-type" : "tame";
        }
        out.push_back(v);
    };
    for (int k = 1; k <= k_bound; ++k) {
        add(true, k, 0);
        for (int l = 0; l <= l_bound && 2 * l <= k; ++l) add(false, k, l);
    }
    add(true, 0, 0);
    for (int l = 0; l <= l_bound; ++l) add(false, 0, l);
    return out;
}

bool dinf_contains(int k, int l, const DInfWord& w) {
    if (k == 0) return w.eps == 0 ? w.m == 0 : w.m == (l - 1) / 2;
    int h = k / 2;
    return w.eps == 0 ? mod(w.m, h) == 0 : mod(w.m - (l - 1) / 2, h) == 0;
}

MultVector dinf_tame_mult(int k, int l, int cutoff) {
    if (k < 0 || (k != 0 && k % 2 != 0) || l < 1 || l % 2 == 0 || (k != 0 && 2 * l > k) || cutoff < 1)
        throw Error("BadParams", "o2sym", "k=" + std::to_string(k) + " l=" + std::to_string(l));
    MultVector mv;
    mv.cutoff = cutoff;
    mv.triv = 1;
    mv.sgn = 1;
    for (int t = 1; t <= cutoff; ++t) {
        int m = t / 2, eps = t % 2;
        // images of the diagonal words (v11 v22)^m v11^eps and its partner
        DInfWord w1{m, eps}, w2{-m - eps, eps};
        mv.v.push_back(static_cast<int>(dinf_contains(k, l, w1)) + static_cast<int>(dinf_contains(k, l, w2)));
    }
    return mv;
}

bool ane_consistency(int n, int cutoff, bool perturb) {
    if (n < 1 || cutoff < 1) throw Error("BadParams", "o2sym", "n=" + std::to_string(n));
    int d = perturb ? 2 * n - 1 : 2 * n;
    MultVector ane, dq;
    ane.cutoff = dq.cutoff = cutoff;
    ane.triv = dq.triv = 1;
    ane.sgn = 0;
    dq.sgn = 1;
    for (int k = 1; k <= cutoff; ++k) {
        ane.v.push_back(k % d == 0 ? 1 : 0);
        dq.v.push_back(k % d == 0 ? 2 : 0);
    }
    return ane == induced_mult({O2Subgroup::Kind::dihedral, 2 * n}, {}, cutoff) &&
           dq == induced_mult({O2Subgroup::Kind::cyclic, 2 * n}, {}, cutoff);
}

std::vector<BranchMismatch> verify_branching(int K) {
    std::vector<BranchMismatch> out;
    FiniteGroup big = make_dihedral(K);
    auto irreps = group_irreps(big);
    auto find_irrep = [&](const std::string& name) -> const GroupRep& {
        for (const auto& r : irreps)
            if (r.label == name) return r;
        throw Error("BadParams", "o2sym", "no irreducible " + name);
    };
    std::vector<IrrO2> tests{IrrO2::triv(), IrrO2::sgn()};
    for (int m = 1; 2 * m < K; ++m) tests.push_back(IrrO2::V(m));
    for (int k = 1; k <= K; ++k) {
        if (K % k != 0) continue;
        for (bool dihedral : {false, true}) {
            FiniteGroup sub = dihedral ? make_dihedral(k) : make_cyclic(k);
            auto sub_irreps = group_irreps(sub);
            for (const auto& irr : tests) {
                const GroupRep& big_rep =
                    find_irrep(irr.kind == IrrO2::Kind::V ? "V" + std::to_string(irr.k) : irr.label());
                std::vector<Mat> rho(sub.order);
                for (int x = 0; x < sub.order; ++x) {
                    int a = x % k, b = dihedral ? x / k : 0;
                    rho[x] = big_rep.rho[dih(K, a * (K / k), b)];
                }
                auto mult = decompose_rep(sub, rho);
                std::map<std::string, int> exact;
                for (size_t i = 0; i < mult.size(); ++i)
                    if (mult[i]) exact[sub_irreps[i].label] = mult[i];
                auto sym = branch(irr, {dihedral ? O2Subgroup::Kind::dihedral : O2Subgroup::Kind::cyclic, k});
                if (exact != sym) out.push_back({K, k, dihedral, irr.label()});
            }
        }
    }
    return out;
}

} // namespace qgw
