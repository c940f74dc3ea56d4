#include "fibtc/report.hpp"

#include <sstream>

#include "fibtc/obstruct.hpp"

namespace fibtc {

std::string CriteriaReport::human() const
{
    std::string out;
    for (const auto& e : entries)
        if (!e.text.empty())
            out += e.text + "\n";
    return out;
}

std::string CriteriaReport::machine() const
{
    std::string out;
    for (const auto& e : entries)
        out += e.key + "=" + e.value + "\n";
    return out;
}

std::optional<std::string> CriteriaReport::value(std::string_view key) const
{
    for (const auto& e : entries)
        if (e.key == key)
            return e.value;
    return std::nullopt;
}

namespace {

std::string coeff_tag(CoefficientRing c)
{
    return c == CoefficientRing::F2 ? "f2" : "z";
}

std::string describe_base(const RingPresentation& base)
{
    const Signature& sig = *base.signature();
    if (sig.size() == 0)
        return "point";
    std::string out = to_string(sig.ring()) + "[";
    for (std::size_t i = 0; i < sig.size(); ++i)
        out += (i ? ", " : "") + sig[i].name + ":" + std::to_string(sig[i].degree);
    out += "]";
    if (!base.relations().empty()) {
        out += "/(";
        for (std::size_t i = 0; i < base.relations().size(); ++i)
            out += (i ? ", " : "") + render(base.relations()[i]);
        out += ")";
    }
    if (base.truncation())
        out += ", zero above degree " + std::to_string(*base.truncation());
    return out;
}

std::vector<CoefficientRing> pair_coefficients(const SpecFile& spec, const CriteriaOptions& opt)
{
    std::optional<CoefficientRing> chosen = opt.coefficients ? opt.coefficients : spec.coefficients;
    const BundleSpec& b = spec.bundle;
    if (chosen) {
        if (*chosen == CoefficientRing::Integers &&
            (b.field == Field::R || b.base->coefficients() == CoefficientRing::F2))
            throw BundleError("integral criteria need field C or H over an integral base");
        return {*chosen};
    }
    if (b.field != Field::R && b.base->coefficients() == CoefficientRing::Integers)
        return {CoefficientRing::Integers, CoefficientRing::F2};
    return {CoefficientRing::F2};
}

class Builder {
public:
    explicit Builder(CriteriaReport& r) : r_(r) {}

    void add(std::string key, std::string value, std::string text = {})
    {
        r_.entries.push_back({std::move(key), std::move(value), std::move(text)});
    }

    // Entries for a power search: min_k, witness_k, witness.
    void search(const std::string& key, const std::string& label, const VanishingSearch& s,
                const std::string& element)
    {
        std::string text = label + ": ";
        if (const int* k = std::get_if<int>(&s.min_k)) {
            add(key + ".min_k", std::to_string(*k));
            if (s.witness) {
                add(key + ".witness_k", std::to_string(s.witness_k));
                add(key + ".witness", render(*s.witness));
                text += "nonzero at k=" + std::to_string(s.witness_k) + ", witness " +
                        render(*s.witness) + "; zero at k=" + std::to_string(*k);
            } else {
                text += "zero at k=0";
            }
        } else {
            int kmax = std::get<NotFoundUpTo>(s.min_k).k_max;
            add(key + ".min_k", "none");
            add(key + ".searched_up_to", std::to_string(kmax));
            text += "nonzero for every k <= " + std::to_string(kmax);
        }
        r_.entries.back().text = text + "  (" + element + "^k)";
    }

    // Entries for a fails/passes criterion with smallest passing k.
    void verdict(const std::string& key, const std::string& label, std::optional<int> pass_k,
                 int kmax)
    {
        if (pass_k) {
            add(key + ".min_k", std::to_string(*pass_k),
                label + ": " +
                    (*pass_k > 0 ? "fails at k=" + std::to_string(*pass_k - 1) + ", " : "") +
                    "passes at k=" + std::to_string(*pass_k));
        } else {
            add(key + ".min_k", "none", label + ": fails for every k <= " + std::to_string(kmax));
        }
    }

private:
    CriteriaReport& r_;
};

void sphere_criteria(Builder& out, const BundleSpec& b, int kmax)
{
    std::optional<int> pass;
    for (int k = 0; k <= kmax && !pass; ++k)
        if (gysin_equivalence_check(b, k))
            pass = k;
    out.verdict("sphere.f2", "sphere[f2] (e(zeta~)^k = 0 <=> w_n^k divisible by w_{n+1})", pass,
                kmax);

    ProjectiveRing p = projective_ring(b, CoefficientRing::F2);
    VanishingSearch s = search_vanishing(p.e_zeta, kmax);
    if (const int* k = std::get_if<int>(&s.min_k)) {
        symm_sphere_test(b, *k);
        if (*k > 0)
            symm_sphere_test(b, *k - 1);
        out.verdict("symm_sphere.f2", "symm_sphere[f2] (e(zeta)^k = 0 in H*(P(xi)))", *k, kmax);
    } else {
        out.verdict("symm_sphere.f2", "symm_sphere[f2] (e(zeta)^k = 0 in H*(P(xi)))", std::nullopt,
                    kmax);
    }
    if (s.witness) {
        out.add("symm_sphere.f2.witness_k", std::to_string(s.witness_k));
        out.add("symm_sphere.f2.witness", render(*s.witness),
                "  witness e(zeta)^" + std::to_string(s.witness_k) + " = " + render(*s.witness));
    }
}

void symm_proj_criterion(Builder& out, const BundleSpec& b, int kmax)
{
    if (!top_degree(*b.base)) {
        out.add("symm_proj.f2", "not_evaluated",
                "symm_proj[f2]: not evaluated (the base ring has no known top degree)");
        return;
    }
    FederRing f = feder_ring(b);
    GrassmannRing g = grassmann_ring(b);
    VanishingSearch s = search_vanishing(f.e_alpha, kmax);
    const int last = std::holds_alternative<int>(s.min_k) ? std::get<int>(s.min_k) : kmax;
    RingElement y_power = RingElement::one(g.ring);
    RingElement a_power = f.e_alpha;
    for (int k = 1; k <= last; ++k) {
        if (a_power.is_zero() != y_power.is_zero())
            throw InternalDisagreement("pair bundle k=" + std::to_string(k) +
                                       ": e(alpha)^k and w_d(beta)^(k-1) disagree on vanishing");
        a_power *= f.e_alpha;
        y_power *= g.Y;
    }
    out.search("symm_proj.f2", "symm_proj[f2]", s, "e(alpha)");
}

}  // namespace

CriteriaReport run_criteria(const SpecFile& spec, const CriteriaOptions& options)
{
    CriteriaReport report;
    Builder out(report);
    const BundleSpec& b = spec.bundle;
    const int kmax = options.k_max ? *options.k_max : spec.k_max ? *spec.k_max : default_k_max(b);
    const auto coeffs = pair_coefficients(spec, options);

    out.add("field", to_string(b.field),
            "bundle: K=" + to_string(b.field) + ", rank " + std::to_string(b.rank) + " (n=" +
                std::to_string(b.n()) + ", d=" + std::to_string(b.d()) + ")");
    out.add("rank", std::to_string(b.rank));
    out.add("base", describe_base(*b.base), "base: " + describe_base(*b.base));
    for (int i = 1; i <= b.rank; ++i)
        if (!b.w(i).is_zero())
            out.add("w" + std::to_string(i), render(b.w(i)),
                    "  w" + std::to_string(i) + " = " + render(b.w(i)));
    out.add("kmax", std::to_string(kmax), "k searched up to " + std::to_string(kmax));

    try {
        if (b.field == Field::R)
            sphere_criteria(out, b, kmax);
        for (CoefficientRing c : coeffs) {
            QTildeRing q = q_tilde_ring(b, c);
            out.search("proj_pair." + coeff_tag(c), "proj_pair[" + coeff_tag(c) + "]",
                       search_vanishing(q.e_alpha_tilde, kmax), "e(alpha~)");
        }
        symm_proj_criterion(out, b, kmax);
    } catch (const InternalDisagreement& e) {
        report.check_failed = true;
        out.add("error", e.what(), std::string("check failed: ") + e.what());
    }

    out.add("sphere.z", "not_evaluated",
            "sphere[z]: not evaluated (integral sphere criteria need twisted coefficients)");
    out.add("stable_range",
            "dim B < (2k-1)n-2",
            "stable range: with n=" + std::to_string(b.n()) +
                ", the sphere criterion at k matches the cohomotopy condition only when "
                "dim B < " + "(2k-1)*" + std::to_string(b.n()) + "-2");
    out.add("note", "cohomology_shadow_only",
            "note: only failures are certified; passing a cohomology shadow does not prove "
            "the stable cohomotopy Euler class condition");
    return report;
}

std::string dump_ring(const SpecFile& spec, std::string_view which,
                      std::optional<CoefficientRing> coefficients)
{
    const BundleSpec& b = spec.bundle;
    CoefficientRing c = coefficients ? *coefficients
                        : spec.coefficients ? *spec.coefficients
                        : b.field == Field::R ? CoefficientRing::F2
                                              : b.base->coefficients();
    PresentationPtr ring;
    std::vector<std::pair<std::string, Polynomial>> named;
    if (which == "proj") {
        auto p = projective_ring(b, c);
        ring = p.ring;
        named = {{"e_zeta", p.e_zeta.polynomial()}, {"e_eta", p.e_eta.polynomial()}};
    } else if (which == "qtilde") {
        auto q = q_tilde_ring(b, c);
        ring = q.ring;
        named = {{"e_alpha_tilde", q.e_alpha_tilde.polynomial()}};
    } else if (which == "grassmann") {
        auto g = grassmann_ring(b);
        ring = g.ring;
        named = {{"Y", g.Y.polynomial()}, {"Z", g.Z.polynomial()}};
    } else if (which == "feder") {
        auto f = feder_ring(b);
        ring = f.ring;
        named = {{"e_lambda", f.e_lambda.polynomial()},
                 {"e_alpha", f.e_alpha.polynomial()},
                 {"w_d_beta", f.w_d_beta.polynomial()}};
    } else {
        throw BundleError("unknown ring '" + std::string(which) +
                          "' (expected proj, qtilde, grassmann or feder)");
    }

    std::ostringstream out;
    const Signature& sig = *ring->signature();
    out << "ring: " << which << "\n";
    out << "coefficients: " << to_string(sig.ring()) << "\n";
    out << "strategy: " << to_string(ring->strategy()) << "\n";
    out << "generators:";
    for (std::size_t i = 0; i < sig.size(); ++i)
        out << (i ? ", " : " ") << sig[i].name << ":" << sig[i].degree;
    out << "\n";
    out << "truncation: " << (ring->truncation() ? std::to_string(*ring->truncation()) : "none")
        << "\n";
    for (const auto& cap : ring->caps())
        out << "cap: degree in first " << cap.prefix << " generators <= " << cap.max_degree << "\n";
    out << "relations:\n";
    for (const auto& r : ring->relations())
        out << "  " << render(r) << "\n";
    out << "normal form basis:\n";
    for (const auto& r : ring->reducers())
        out << "  " << render(r) << "\n";
    if (auto top = top_degree(*ring))
        out << "top degree: " << *top << "\n";
    for (const auto& [name, p] : named)
        out << name << " = " << render(p) << "\n";
    return out.str();
}

}  // namespace fibtc
