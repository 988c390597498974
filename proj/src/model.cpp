#include "ftcost/model.hpp"

#include "ftcost/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace ftcost {

using nlohmann::json;

long double ThresholdParams::B(long t) const
{
    return std::pow(static_cast<long double>(p_thres), -static_cast<long double>(t));
}

CostMatrix::CostMatrix(std::vector<std::string> labels, std::size_t j_normal,
                       std::vector<std::vector<Rational>> entries)
    : labels_(std::move(labels)), j_normal_(j_normal), entries_(std::move(entries))
{
    const std::size_t dim = labels_.size();
    if (dim == 0) {
        throw DimensionError("cost matrix needs at least one type");
    }
    if (entries_.size() != dim) {
        throw DimensionError("cost matrix has " + std::to_string(entries_.size()) + " rows for " +
                             std::to_string(dim) + " labels");
    }
    for (const auto& row : entries_) {
        if (row.size() != dim) {
            throw DimensionError("cost matrix is not square");
        }
    }
    if (j_normal_ < 1 || j_normal_ > dim) {
        throw DomainError("j_normal must lie in [1, " + std::to_string(dim) + "]");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (entries_[i][j] < 0) {
                throw DomainError("cost matrix entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") is negative");
            }
            if (i >= j_normal_ && j < j_normal_ && entries_[i][j] != 0) {
                throw DomainError("magic-to-normal block must be zero; entry (" +
                                  std::to_string(i) + "," + std::to_string(j) + ") is not");
            }
        }
    }
}

bool CostMatrix::is_integral() const
{
    for (const auto& row : entries_) {
        for (const auto& x : row) {
            if (!ftcost::is_integral(x)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<BigInt>> CostMatrix::integer_entries() const
{
    std::vector<std::vector<BigInt>> out;
    out.reserve(entries_.size());
    for (const auto& row : entries_) {
        auto& dst = out.emplace_back();
        for (const auto& x : row) {
            if (!ftcost::is_integral(x)) {
                throw DomainError("cost matrix has fractional entries");
            }
            dst.push_back(boost::multiprecision::numerator(x));
        }
    }
    return out;
}

const StatePrepSpec* SchemeSpec::find_state(std::string_view state_name) const
{
    auto it = std::find_if(states.begin(), states.end(),
                           [&](const StatePrepSpec& s) { return s.name == state_name; });
    return it == states.end() ? nullptr : &*it;
}

const StatePrepSpec& SchemeSpec::state(std::string_view state_name) const
{
    if (const auto* s = find_state(state_name)) {
        return *s;
    }
    throw ConfigSemanticError("unknown state '" + std::string(state_name) + "'");
}

Rational AlgorithmProfile::effective_magic_share() const
{
    if (magic_share_override) {
        return *magic_share_override;
    }
    const Rational doubled = 2 * magic_fraction;
    return doubled > 1 ? Rational(1) : doubled;
}

std::string_view to_string(Phase phase)
{
    switch (phase) {
    case Phase::subcritical:
        return "subcritical";
    case Phase::critical:
        return "critical";
    case Phase::supercritical:
        return "supercritical";
    }
    return "?";
}

std::string_view to_string(MultiplicityMode mode)
{
    return mode == MultiplicityMode::independent ? "independent" : "shared";
}

namespace {

[[noreturn]] void semantic(const std::string& what)
{
    throw ConfigSemanticError(what);
}

void require(bool ok, const std::string& what)
{
    if (!ok) {
        semantic(what);
    }
}

}  // namespace

void validate(const SchemeSpec& spec)
{
    require(spec.code.n >= 1, "code.n must be >= 1");
    require(spec.code.t >= 1, "code.t must be >= 1");
    require(spec.code.n >= 2 * spec.code.t + 1, "code.n must be >= 2t+1");
    require(spec.threshold.p_thres > 0 && spec.threshold.p_thres < 1,
            "threshold.p_thres must lie in (0,1)");
    require(spec.threshold.kappa > 0 && spec.threshold.kappa < 1,
            "threshold.kappa must lie in (0,1)");

    std::set<std::string, std::less<>> names;
    for (const auto& s : spec.states) {
        require(!s.name.empty(), "state name must be nonempty");
        require(names.insert(s.name).second, "duplicate state '" + s.name + "'");
        const std::string where = "state '" + s.name + "': ";
        require(s.n_carrier >= 0, where + "n_carrier must be >= 0");
        require(s.v_anc >= 0, where + "v_anc must be >= 0");
        require(s.N_fault >= 1, where + "N_fault must be >= 1");
        require(s.M_per_exrec >= 1, where + "M_per_exrec must be >= 1");
        require(!s.prep_duration || *s.prep_duration >= 0, where + "prep_duration must be >= 0");
        require(!s.r || *s.r >= 1, where + "r must be >= 1");
        require(!s.mu || *s.mu >= 1, where + "mu must be >= 1");
        require(!s.mu_shared || *s.mu_shared >= 1, where + "mu_shared must be >= 1");
    }
    auto known = [&](const std::string& ref, const std::string& where) {
        require(names.count(ref) != 0, where + " references unknown state '" + ref + "'");
    };

    if (!spec.raw_matrix) {
        require(!spec.code.data_state.empty(), "code.data_state is required without raw_matrix");
        require(spec.ec_gadget.has_value(), "ec_gadget is required without raw_matrix");
        require(spec.magic.has_value(), "magic is required without raw_matrix");
    }
    if (!spec.code.data_state.empty()) {
        known(spec.code.data_state, "code.data_state");
    }
    if (spec.ec_gadget) {
        const auto& ec = *spec.ec_gadget;
        for (const auto& e : ec.syndromes) {
            known(e.state, "ec_gadget.syndromes");
            require(e.d >= 0, "ec_gadget.syndromes: d must be >= 0");
        }
        require(ec.d_R >= 0, "ec_gadget.d_R must be >= 0");
        require(ec.g >= 1, "ec_gadget.g must be >= 1");
        require(ec.m >= 1, "ec_gadget.m must be >= 1");
    }
    if (spec.magic) {
        const auto& mg = *spec.magic;
        known(mg.state, "magic.state");
        for (const auto& h : mg.helpers) {
            known(h, "magic.helpers");
        }
        require(mg.r_A >= 1, "magic.r_A must be >= 1");
        require(mg.injection_steps >= 1, "magic.injection_steps must be >= 1");
    }
}

// ---------------------------------------------------------------------------
// JSON plumbing

namespace {

[[noreturn]] void syntax(const std::string& what)
{
    throw ConfigSyntaxError(what);
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& where)
{
    if (!obj.is_object()) {
        syntax(where + " must be an object");
    }
    for (const auto& item : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            syntax("unknown key '" + item.key() + "' in " + where);
        }
    }
}

const json& field(const json& obj, const char* key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        syntax("missing key '" + std::string(key) + "' in " + where);
    }
    return *it;
}

long get_count(const json& obj, const char* key, const std::string& where)
{
    const json& v = field(obj, key, where);
    if (!v.is_number_integer()) {
        syntax(where + "." + key + " must be an integer");
    }
    return v.get<long>();
}

long get_count_or(const json& obj, const char* key, const std::string& where, long fallback)
{
    return obj.contains(key) ? get_count(obj, key, where) : fallback;
}

double get_number(const json& obj, const char* key, const std::string& where)
{
    const json& v = field(obj, key, where);
    if (!v.is_number()) {
        syntax(where + "." + key + " must be a number");
    }
    return v.get<double>();
}

std::string get_string(const json& obj, const char* key, const std::string& where)
{
    const json& v = field(obj, key, where);
    if (!v.is_string()) {
        syntax(where + "." + key + " must be a string");
    }
    return v.get<std::string>();
}

/// Accepts a JSON number, a decimal string, or an "a/b" fraction string.
Rational get_rational(const json& v, const std::string& where)
{
    try {
        if (v.is_number_integer()) {
            return Rational(v.get<long long>());
        }
        if (v.is_number()) {
            return rational_from_double(v.get<double>());
        }
        if (v.is_string()) {
            const auto text = v.get<std::string>();
            const auto slash = text.find('/');
            if (slash == std::string::npos) {
                return rational_from_decimal(text);
            }
            const Rational num = rational_from_decimal(std::string_view(text).substr(0, slash));
            const Rational den = rational_from_decimal(std::string_view(text).substr(slash + 1));
            if (den == 0) {
                syntax(where + " has a zero denominator");
            }
            return num / den;
        }
    } catch (const DomainError& e) {
        syntax(where + ": " + e.what());
    }
    syntax(where + " must be a number or a numeric string");
}

json rational_to_json(const Rational& value)
{
    if (is_integral(value)) {
        const BigInt num = boost::multiprecision::numerator(value);
        if (num <= std::numeric_limits<long long>::max() &&
            num >= std::numeric_limits<long long>::min()) {
            return num.convert_to<long long>();
        }
        return num.str();
    }
    // Terminating decimals print as decimals, anything else as a fraction.
    BigInt den = boost::multiprecision::denominator(value);
    int places = 0;
    while (den % 2 == 0 || den % 5 == 0) {
        if (den % 2 == 0) {
            den /= 2;
        }
        if (den % 5 == 0) {
            den /= 5;
        }
    }
    if (den == 1) {
        while (!is_integral(value * Rational(pow(BigInt(10), static_cast<unsigned>(places))))) {
            ++places;
        }
        return format_fixed(value, places);
    }
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

StatePrepSpec parse_state(const json& j, std::size_t index)
{
    const std::string where = "states[" + std::to_string(index) + "]";
    reject_unknown(j,
                   {"name", "n_carrier", "v_anc", "N_fault", "M_per_exrec", "prep_duration", "r",
                    "mu", "mu_shared"},
                   where);
    StatePrepSpec s;
    s.name = get_string(j, "name", where);
    s.n_carrier = get_count(j, "n_carrier", where);
    s.v_anc = get_count(j, "v_anc", where);
    s.N_fault = get_count(j, "N_fault", where);
    s.M_per_exrec = get_count(j, "M_per_exrec", where);
    if (j.contains("prep_duration")) {
        s.prep_duration = get_number(j, "prep_duration", where);
    }
    if (j.contains("r")) {
        s.r = get_count(j, "r", where);
    }
    if (j.contains("mu")) {
        s.mu = get_count(j, "mu", where);
    }
    if (j.contains("mu_shared")) {
        s.mu_shared = get_rational(j.at("mu_shared"), where + ".mu_shared");
    }
    return s;
}

CostMatrix parse_raw_matrix(const json& j)
{
    const std::string where = "raw_matrix";
    reject_unknown(j, {"labels", "j_normal", "rows"}, where);
    const json& labels_json = field(j, "labels", where);
    if (!labels_json.is_array()) {
        syntax("raw_matrix.labels must be an array");
    }
    std::vector<std::string> labels;
    for (const auto& l : labels_json) {
        if (!l.is_string()) {
            syntax("raw_matrix.labels entries must be strings");
        }
        labels.push_back(l.get<std::string>());
    }
    const long j_normal = get_count_or(j, "j_normal", where, 1);
    const json& rows_json = field(j, "rows", where);
    if (!rows_json.is_array()) {
        syntax("raw_matrix.rows must be an array");
    }
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < rows_json.size(); ++i) {
        const json& row = rows_json[i];
        if (!row.is_array()) {
            syntax("raw_matrix.rows[" + std::to_string(i) + "] must be an array");
        }
        auto& dst = rows.emplace_back();
        for (std::size_t k = 0; k < row.size(); ++k) {
            dst.push_back(get_rational(row[k], "raw_matrix.rows[" + std::to_string(i) + "][" +
                                                   std::to_string(k) + "]"));
        }
    }
    if (j_normal < 0) {
        semantic("raw_matrix.j_normal must be >= 1");
    }
    try {
        return CostMatrix(std::move(labels), static_cast<std::size_t>(j_normal), std::move(rows));
    } catch (const Error& e) {
        semantic(std::string("raw_matrix: ") + e.what());
    }
}

}  // namespace

SchemeSpec parse_scheme_config(std::string_view document)
{
    json root;
    try {
        root = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        syntax(std::string("malformed scheme config: ") + e.what());
    }
    reject_unknown(root, {"name", "code", "threshold", "states", "ec_gadget", "magic", "raw_matrix"},
                   "config");

    SchemeSpec spec;
    spec.name = get_string(root, "name", "config");

    const json& code = field(root, "code", "config");
    reject_unknown(code, {"n", "t", "data_state"}, "code");
    spec.code.n = get_count(code, "n", "code");
    spec.code.t = get_count(code, "t", "code");
    if (code.contains("data_state")) {
        spec.code.data_state = get_string(code, "data_state", "code");
    }

    const json& thr = field(root, "threshold", "config");
    reject_unknown(thr, {"p_thres", "kappa"}, "threshold");
    spec.threshold.p_thres = get_number(thr, "p_thres", "threshold");
    if (thr.contains("kappa")) {
        spec.threshold.kappa = get_number(thr, "kappa", "threshold");
    }

    const json& states = field(root, "states", "config");
    if (!states.is_array()) {
        syntax("states must be an array");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        spec.states.push_back(parse_state(states[i], i));
    }

    if (root.contains("ec_gadget")) {
        const json& ec = root.at("ec_gadget");
        reject_unknown(ec, {"syndromes", "d_R", "g", "m"}, "ec_gadget");
        ECGadgetSpec gadget;
        const json& syn = field(ec, "syndromes", "ec_gadget");
        if (!syn.is_array()) {
            syntax("ec_gadget.syndromes must be an array");
        }
        for (std::size_t i = 0; i < syn.size(); ++i) {
            const std::string where = "ec_gadget.syndromes[" + std::to_string(i) + "]";
            reject_unknown(syn[i], {"state", "d"}, where);
            gadget.syndromes.push_back({get_string(syn[i], "state", where),
                                        get_count(syn[i], "d", where)});
        }
        gadget.d_R = get_count_or(ec, "d_R", "ec_gadget", 0);
        gadget.g = get_count_or(ec, "g", "ec_gadget", 1);
        gadget.m = get_count_or(ec, "m", "ec_gadget", 1);
        spec.ec_gadget = std::move(gadget);
    }

    if (root.contains("magic")) {
        const json& mg = root.at("magic");
        reject_unknown(mg, {"state", "helpers", "r_A", "injection_steps"}, "magic");
        MagicGadgetSpec magic;
        magic.state = get_string(mg, "state", "magic");
        if (mg.contains("helpers")) {
            const json& helpers = mg.at("helpers");
            if (!helpers.is_array()) {
                syntax("magic.helpers must be an array");
            }
            for (std::size_t i = 0; i < helpers.size(); ++i) {
                const std::string where = "magic.helpers[" + std::to_string(i) + "]";
                reject_unknown(helpers[i], {"state"}, where);
                magic.helpers.push_back(get_string(helpers[i], "state", where));
            }
        }
        magic.r_A = get_count(mg, "r_A", "magic");
        magic.injection_steps = get_count_or(mg, "injection_steps", "magic", 2);
        spec.magic = std::move(magic);
    }

    if (root.contains("raw_matrix")) {
        spec.raw_matrix = parse_raw_matrix(root.at("raw_matrix"));
    }

    validate(spec);
    return spec;
}

std::string serialize_scheme_config(const SchemeSpec& spec)
{
    json root;
    root["name"] = spec.name;
    root["code"] = {{"n", spec.code.n}, {"t", spec.code.t}};
    if (!spec.code.data_state.empty()) {
        root["code"]["data_state"] = spec.code.data_state;
    }
    root["threshold"] = {{"p_thres", spec.threshold.p_thres}, {"kappa", spec.threshold.kappa}};
    root["states"] = json::array();
    for (const auto& s : spec.states) {
        json j = {{"name", s.name},
                  {"n_carrier", s.n_carrier},
                  {"v_anc", s.v_anc},
                  {"N_fault", s.N_fault},
                  {"M_per_exrec", s.M_per_exrec}};
        if (s.prep_duration) {
            j["prep_duration"] = *s.prep_duration;
        }
        if (s.r) {
            j["r"] = *s.r;
        }
        if (s.mu) {
            j["mu"] = *s.mu;
        }
        if (s.mu_shared) {
            j["mu_shared"] = rational_to_json(*s.mu_shared);
        }
        root["states"].push_back(std::move(j));
    }
    if (spec.ec_gadget) {
        json syn = json::array();
        for (const auto& e : spec.ec_gadget->syndromes) {
            syn.push_back({{"state", e.state}, {"d", e.d}});
        }
        root["ec_gadget"] = {{"syndromes", syn},
                             {"d_R", spec.ec_gadget->d_R},
                             {"g", spec.ec_gadget->g},
                             {"m", spec.ec_gadget->m}};
    }
    if (spec.magic) {
        json helpers = json::array();
        for (const auto& h : spec.magic->helpers) {
            helpers.push_back({{"state", h}});
        }
        root["magic"] = {{"state", spec.magic->state},
                         {"helpers", helpers},
                         {"r_A", spec.magic->r_A},
                         {"injection_steps", spec.magic->injection_steps}};
    }
    if (spec.raw_matrix) {
        const auto& m = *spec.raw_matrix;
        json rows = json::array();
        for (const auto& row : m.entries()) {
            json r = json::array();
            for (const auto& x : row) {
                r.push_back(rational_to_json(x));
            }
            rows.push_back(std::move(r));
        }
        root["raw_matrix"] = {{"labels", m.labels()}, {"j_normal", m.j_normal()}, {"rows", rows}};
    }
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

CostMatrix build_cost_matrix(const SchemeSpec& spec, const Multiplicities& mult, Rounding rounding)
{
    if (spec.raw_matrix) {
        return *spec.raw_matrix;
    }
    if (!spec.ec_gadget || !spec.magic) {
        throw ConfigSemanticError("component-level scheme needs ec_gadget and magic");
    }

    std::optional<MultiplicityMode> mode;
    auto record = [&](const std::string& state) -> const MultiplicityRecord& {
        auto it = mult.find(state);
        if (it == mult.end()) {
            throw DomainError("missing multiplicity for state '" + state + "'");
        }
        if (mode && *mode != it->second.mode) {
            throw DomainError("sharing-mode mismatch across states");
        }
        mode = it->second.mode;
        return it->second;
    };
    auto size_of = [&](const std::string& state) {
        const auto& s = spec.state(state);
        return Rational(s.n_carrier + s.v_anc);
    };

    const auto& data = record(spec.code.data_state);
    const Rational lambda_psi = data.mu * size_of(spec.code.data_state);

    Rational lambda_ec = 0;
    for (const auto& e : spec.ec_gadget->syndromes) {
        const auto& rec = record(e.state);
        lambda_ec += rec.r * rec.mu * size_of(e.state);
    }
    const Rational lambda_normal = lambda_psi + lambda_ec;

    const auto& mg = *spec.magic;
    const auto& magic_state = spec.state(mg.state);
    const auto& a = record(mg.state);
    const Rational lambda_magic = mg.r_A * a.mu * magic_state.n_carrier;

    Rational v_prep = magic_state.v_anc;
    for (const auto& h : mg.helpers) {
        const auto& rec = record(h);
        v_prep += rec.r * rec.mu * size_of(h);
    }
    const Rational v_A = v_prep + lambda_ec;
    const Rational b = lambda_normal + mg.r_A * a.mu * v_A;

    auto finish = [&](const Rational& x) {
        return rounding == Rounding::half_up ? Rational(round_half_up(x)) : x;
    };
    return CostMatrix({"normal", "magic"}, 1,
                      {{finish(lambda_normal), finish(b)}, {Rational(0), finish(lambda_magic)}});
}

}  // namespace ftcost
