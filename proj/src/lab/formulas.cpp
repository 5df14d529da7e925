#include "cliquesat/lab/formulas.hpp"

#include "cliquesat/bounds.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/extraction.hpp"
#include "cliquesat/lab/args.hpp"

#include <cmath>

namespace cliquesat::lab {

using cliquesat::to_string;

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

void add_profile(Fields& fields, const ExponentProfile& p) {
    fields.emplace_back("formula", p.formula());
    fields.emplace_back(p.lead + "_exponent", to_string(p.lead_exponent));
    fields.emplace_back("n_exponent", to_string(p.n_exponent));
}

// Adds log_value/value when the caller supplied both the lead and n.
void add_value(Fields& fields, ArgReader& args, const ExponentProfile& p) {
    if (args.has(p.lead) && args.has("n")) {
        const long double lead = args.real(p.lead);
        const long double n = args.real("n");
        const long double log_value = p.log_value(lead, n);
        fields.emplace_back("log_value", format_real(log_value));
        fields.emplace_back("value", format_real(std::exp(log_value)));
    }
}

} // namespace

const std::string& FormulaResult::get(const std::string& name) const {
    for (const auto& [k, v] : fields) {
        if (k == name) {
            return v;
        }
    }
    throw InputError("formula " + formula + " has no field '" + name + "'");
}

const std::vector<std::string>& formula_names() {
    static const std::vector<std::string> names = {"balance", "beta",  "thm11",   "kk",    "eskst", "gnp",
                                                   "thm12",   "lemma41", "thm14", "prop15", "conj"};
    return names;
}

FormulaResult evaluate_formula(const std::string& name, const Params& params) {
    ArgReader args(params, "formula " + name);
    FormulaResult result;
    result.formula = name;
    Fields& f = result.fields;

    if (name == "balance") {
        const auto verdict = check_2_balanced(args.graph("F").graph);
        f.emplace_back("balanced", verdict.balanced ? "true" : "false");
        f.emplace_back("density", to_string(verdict.density));
        if (!verdict.balanced) {
            std::string witness;
            for (Vertex v : verdict.witness) {
                witness += (witness.empty() ? "" : ",") + std::to_string(v);
            }
            f.emplace_back("witness", witness);
            f.emplace_back("witness_density", to_string(verdict.witness_density));
        }
    } else if (name == "beta") {
        const Graph g = args.graph("F").graph;
        const std::size_t r = args.size("r");
        f.emplace_back("beta", to_string(beta_exponent(g, r)));
        f.emplace_back("beats_gnp", beta_beats_gnp(g.vertex_count(), g.edge_count(), r) ? "true" : "false");
        f.emplace_back("density_form", density_beats_gnp(g.vertex_count(), g.edge_count(), r) ? "true" : "false");
    } else if (name == "thm11") {
        const auto res = thm11_lower(args.real("k"), args.real("n"), args.size("r"), args.size("t"));
        f.emplace_back("first", res.first.formula());
        f.emplace_back("second", res.second.formula());
        f.emplace_back("log_first", format_real(res.log_first));
        f.emplace_back("log_second", format_real(res.log_second));
        f.emplace_back("value", format_real(res.value));
        f.emplace_back("regime", std::to_string(res.regime));
        f.emplace_back("crossover_exponent", to_string(res.crossover_exponent));
        f.emplace_back("crossover", format_real(res.crossover));
    } else if (name == "kk") {
        const std::size_t cliques = args.size("N");
        if (cliques < 1) {
            throw InputError("formula kk: N must be at least 1");
        }
        f.emplace_back("bound", format_real(kruskal_katona_bound(Count{cliques}, args.size("r"), args.size("s"))));
    } else if (name == "eskst") {
        const auto p = eskst_bound(args.size("s"), args.size("t"));
        add_profile(f, p);
        add_value(f, args, p);
    } else if (name == "gnp") {
        const Graph g = args.graph("F").graph;
        const auto p = gnp_baseline(g.vertex_count(), g.edge_count(), args.size("r"));
        add_profile(f, p);
        add_value(f, args, p);
    } else if (name == "thm12") {
        const Graph g = args.graph("F").graph;
        const std::size_t r = args.size("r");
        const auto p = args.has("alpha") ? thm12_normalized(g, r, args.rational("alpha")) : thm12_bound(g, r);
        f.emplace_back("beta", to_string(beta_exponent(g, r)));
        add_profile(f, p);
        add_value(f, args, p);
    } else if (name == "lemma41") {
        const auto v = lemma41_bound(args.real("u"), args.real("m"), args.real("n"), args.size("r"), args.size("s"),
                                     args.size("t"));
        add_profile(f, v.profile);
        f.emplace_back("k", format_real(v.k));
        f.emplace_back("log_value", format_real(v.log_value));
    } else if (name == "thm14") {
        const Rational e = thm14_exponent(args.graph("F").graph, args.size("r"));
        f.emplace_back("n_exponent", to_string(e));
        if (args.has("n")) {
            f.emplace_back("value", format_real(std::pow(args.real("n"), to_real(e))));
        }
    } else if (name == "prop15") {
        const Graph t = args.graph("T").graph;
        if (!is_tree(t)) {
            throw InputError("formula prop15: T must be a tree");
        }
        const auto p = prop15_bound(t.vertex_count(), args.size("r"));
        add_profile(f, p);
        add_value(f, args, p);
    } else if (name == "conj") {
        const auto c = conj_rhs(args.text("name"), args.size("r"), args.size("s"), args.size("t"), args.real("eps", 0));
        add_profile(f, c.profile);
        f.emplace_back("epsilon", format_real(c.epsilon));
        f.emplace_back("epsilon_sign", c.epsilon_sign > 0 ? "+" : "-");
        f.emplace_back("heuristic", "true");
        if (args.has("k") && args.has("n")) {
            f.emplace_back("log_value", format_real(c.log_value(args.real("k"), args.real("n"))));
        }
    } else {
        std::string known;
        for (const auto& n : formula_names()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw InputError("unknown formula '" + name + "' (known: " + known + ")");
    }
    args.finish();
    return result;
}

} // namespace cliquesat::lab
