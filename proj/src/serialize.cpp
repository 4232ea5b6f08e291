#include "mixnorm/serialize.hpp"

#include <cmath>

namespace mixnorm {

nlohmann::json json_real(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

double real_from_json(const nlohmann::json& j)
{
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf")
            return std::numeric_limits<double>::infinity();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
        if (s == "nan")
            return std::numeric_limits<double>::quiet_NaN();
        throw std::invalid_argument("not a real value: " + s);
    }
    return j.get<double>();
}

void to_json(nlohmann::json& j, const ExtExponent& e)
{
    j = e.is_inf() ? nlohmann::json("inf") : nlohmann::json(e.value());
}

void from_json(const nlohmann::json& j, ExtExponent& e)
{
    if (j.is_string())
        e = parse_ext_exponent(j.get<std::string>());
    else
        e = ExtExponent(j.get<double>());
}

void to_json(nlohmann::json& j, const SpaceParams& s)
{
    j = nlohmann::json{{"p", s.p}, {"q", s.q}, {"a", s.a}};
}

void from_json(const nlohmann::json& j, SpaceParams& s)
{
    ExtExponent p = ExtExponent::infinity();
    ExtExponent q = ExtExponent::infinity();
    from_json(j.at("p"), p);
    from_json(j.at("q"), q);
    s = SpaceParams{p, q, j.at("a").get<double>()};
}

void to_json(nlohmann::json& j, const AnalyticFn& f)
{
    j = f.describe();
}

void from_json(const nlohmann::json& j, AnalyticFn& f)
{
    f = parse_function_literal(j.get<std::string>());
}

void to_json(nlohmann::json& j, const NormResult& r)
{
    j = nlohmann::json{{"value", json_real(r.value)},
                       {"method", to_string(r.method)},
                       {"abs_error_estimate", json_real(r.abs_error_estimate)},
                       {"diverged", r.diverged},
                       {"converged", r.converged}};
}

void to_json(nlohmann::json& j, const SeriesNorm& r)
{
    j = nlohmann::json{{"value", json_real(r.value)},
                       {"abs_error_estimate", json_real(r.abs_error_estimate)},
                       {"terms_used", r.terms_used},
                       {"diverged", r.diverged}};
}

void to_json(nlohmann::json& j, const InclusionResult& r)
{
    j = nlohmann::json{{"included", to_string(r.included)}, {"rule", r.rule}};
}

void to_json(nlohmann::json& j, const ContractivityResult& r)
{
    j = nlohmann::json{{"contractive", to_string(r.contractive)},
                       {"included", r.included},
                       {"rule", r.rule}};
}

void to_json(nlohmann::json& j, const Witness& w)
{
    j = nlohmann::json{{"fn", w.fn},
                       {"src", w.from},
                       {"dst", w.into},
                       {"construction", w.construction},
                       {"src_norm", json_real(w.from_norm)},
                       {"dst_norm", json_real(w.into_norm)},
                       {"src_error", json_real(w.from_error)},
                       {"dst_error", json_real(w.into_error)},
                       {"n", w.n},
                       {"gamma", w.gamma},
                       {"relaxed_src", json_real(w.relaxed_from)},
                       {"relaxed_dst", json_real(w.relaxed_into)},
                       {"candidates_tried", w.candidates_tried}};
}

void from_json(const nlohmann::json& j, Witness& w)
{
    from_json(j.at("fn"), w.fn);
    from_json(j.at("src"), w.from);
    from_json(j.at("dst"), w.into);
    w.construction = j.at("construction").get<std::string>();
    w.from_norm = real_from_json(j.at("src_norm"));
    w.into_norm = real_from_json(j.at("dst_norm"));
    w.from_error = real_from_json(j.at("src_error"));
    w.into_error = real_from_json(j.at("dst_error"));
    w.n = j.at("n").get<int>();
    w.gamma = j.at("gamma").get<double>();
    w.relaxed_from = real_from_json(j.at("relaxed_src"));
    w.relaxed_into = real_from_json(j.at("relaxed_dst"));
    w.candidates_tried = j.at("candidates_tried").get<long>();
}

void to_json(nlohmann::json& j, const WitnessCheck& c)
{
    j = nlohmann::json{{"valid", c.valid},
                       {"src_norm", json_real(c.from_norm)},
                       {"dst_norm", json_real(c.into_norm)},
                       {"gap", json_real(c.gap)},
                       {"combined_error", json_real(c.combined_error)}};
}

void to_json(nlohmann::json& j, const CorpusSpec& s)
{
    j = nlohmann::json{{"count", s.count}, {"max_degree", s.max_degree}, {"seed", s.seed}};
}

void from_json(const nlohmann::json& j, CorpusSpec& s)
{
    s.count = j.value("count", s.count);
    s.max_degree = j.value("max_degree", s.max_degree);
    s.seed = j.value("seed", s.seed);
}

void to_json(nlohmann::json& j, const ProbeCell& c)
{
    j = nlohmann::json{{"c", c.c}, {"q", c.q}, {"p", c.p}, {"alpha", c.alpha}};
}

void to_json(nlohmann::json& j, const MarginReport& r)
{
    j = nlohmann::json{{"smaller", json_real(r.smaller)},
                       {"larger", json_real(r.larger)},
                       {"margin", json_real(r.margin)},
                       {"combined_error", json_real(r.combined_error)},
                       {"candidate_violation", r.candidate_violation}};
}

void to_json(nlohmann::json& j, const ViolationRecord& r)
{
    j = nlohmann::json{{"corpus_index", r.corpus_index},
                       {"fn", r.fn},
                       {"cell", r.cell},
                       {"margin", json_real(r.margin)},
                       {"combined_error", json_real(r.combined_error)}};
}

void to_json(nlohmann::json& j, const SweepSummary& s)
{
    j = nlohmann::json{{"conjecture", to_string(s.conjecture)},
                       {"corpus", s.corpus},
                       {"cells", s.cells},
                       {"samples", s.samples},
                       {"min_margin", json_real(s.min_margin)},
                       {"argmin_index", s.argmin_index},
                       {"argmin_fn", s.argmin_fn},
                       {"argmin_cell", s.argmin_cell},
                       {"violations", s.violations}};
}

void to_json(nlohmann::json& j, const MonotonePoint& p)
{
    j = nlohmann::json{{"q", p.q}, {"F", json_real(p.F)}};
}

void to_json(nlohmann::json& j, const MonotoneReport& r)
{
    j = nlohmann::json{{"pairs", r.pairs},
                       {"violations", r.violations},
                       {"max_violation", json_real(r.max_violation)},
                       {"worst_q_lo", r.worst_q_lo},
                       {"worst_q_hi", r.worst_q_hi},
                       {"ok", r.ok},
                       {"points", r.points}};
}

void to_json(nlohmann::json& j, const Cor32Point& p)
{
    j = nlohmann::json{
        {"x", p.x}, {"y", p.y}, {"delta", p.delta}, {"n", p.n}, {"margin", json_real(p.margin)}};
}

void to_json(nlohmann::json& j, const Cor32Report& r)
{
    j = nlohmann::json{{"violations", r.violations},
                       {"min_margin", json_real(r.min_margin)},
                       {"worst", r.worst},
                       {"n_monotonicity_breaches", r.n_monotonicity_breaches},
                       {"ok", r.ok},
                       {"points", static_cast<long>(r.points.size())}};
}

} // namespace mixnorm
