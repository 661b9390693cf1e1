#include "hodgeforge/certificate_json.hpp"

#include <set>

namespace hodgeforge {

namespace {

const ordered_json& field(const ordered_json& j, const char* name) {
    if (!j.is_object()) throw SchemaError(std::string("expected an object holding '") + name + "'");
    const auto it = j.find(name);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + name + "'");
    return *it;
}

std::int64_t integer(const ordered_json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

const ordered_json& array(const ordered_json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
    return j;
}

int small_int(const ordered_json& j, const char* what) {
    const auto v = integer(j, what);
    if (v < -1000000 || v > 1000000) throw SchemaError(std::string(what) + " out of range");
    return static_cast<int>(v);
}

ordered_json plan_entries_json(const std::vector<PlanEntry>& entries) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) arr.push_back({{"p", e.label.p}, {"q", e.label.q}, {"mult", e.mult}});
    return arr;
}

std::vector<PlanEntry> plan_entries_from_json(const ordered_json& j, const char* what) {
    std::vector<PlanEntry> out;
    for (const auto& e : array(j, what)) {
        PlanEntry pe;
        pe.label = SimpleLabel{small_int(field(e, "p"), "p"), small_int(field(e, "q"), "q")};
        pe.mult = integer(field(e, "mult"), "mult");
        out.push_back(pe);
    }
    return out;
}

ordered_json matrix_json(const QMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const ordered_json& j) {
    array(j, "matrix");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? array(j[0], "matrix row").size() : 0;
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (array(j[i], "matrix row").size() != cols) throw SchemaError("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

bool flag(const ordered_json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_boolean()) throw SchemaError(std::string(name) + " must be a boolean");
    return v.get<bool>();
}

// The stored report is informational; verification always recomputes it.
VerificationReport report_from_json(const ordered_json& j) {
    VerificationReport r;
    r.admissible = flag(j, "admissible");
    r.layout = flag(j, "layout");
    r.idempotent = flag(j, "idempotent");
    for (const auto& e : array(field(j, "equivariance"), "equivariance")) {
        try {
            r.equivariance.push_back({TorusElement(rational_from_json(field(e, "x")), rational_from_json(field(e, "y"))),
                                      flag(e, "ok")});
        } catch (const std::invalid_argument& ex) {
            throw SchemaError(ex.what());
        }
    }
    r.hodge_numbers_match = flag(j, "hodge_numbers_match");
    r.hodge_riemann_1 = flag(j, "hodge_riemann_1");
    r.hodge_riemann_2 = flag(j, "hodge_riemann_2");
    r.endomorphism_oracle = flag(j, "endomorphism_oracle");
    r.pass = flag(j, "pass");
    for (const auto& n : array(field(j, "notes"), "notes")) {
        if (!n.is_string()) throw SchemaError("notes must be strings");
        r.notes.push_back(n.get<std::string>());
    }
    return r;
}

}  // namespace

ordered_json to_json(const Rational& r) { return r.to_string(); }

ordered_json to_json(const Gaussian& z) { return {{"re", z.re.to_string()}, {"im", z.im.to_string()}}; }

ordered_json to_json(const RepObject& a) {
    ordered_json arr = ordered_json::array();
    for (const auto& [label, mult] : decompose(a)) arr.push_back({{"p", label.p}, {"q", label.q}, {"mult", mult}});
    return arr;
}

ordered_json to_json(const HodgeNumbers& h) { return {{"weight", h.weight}, {"g", h.g}}; }

ordered_json to_json(const VerificationReport& r) {
    ordered_json eq = ordered_json::array();
    for (const auto& e : r.equivariance)
        eq.push_back({{"x", e.element.x().to_string()}, {"y", e.element.y().to_string()}, {"ok", e.ok}});
    return {{"admissible", r.admissible},
            {"layout", r.layout},
            {"idempotent", r.idempotent},
            {"equivariance", eq},
            {"hodge_numbers_match", r.hodge_numbers_match},
            {"hodge_riemann_1", r.hodge_riemann_1},
            {"hodge_riemann_2", r.hodge_riemann_2},
            {"endomorphism_oracle", r.endomorphism_oracle},
            {"pass", r.pass},
            {"notes", r.notes}};
}

ordered_json to_json(const Certificate& c) {
    ordered_json j;
    j["version"] = c.version;
    j["weight"] = c.input.weight;
    j["g"] = c.input.g;
    j["plan"] = plan_entries_json(c.plan.entries);
    j["mode"] = to_string(c.mode);
    j["N"] = c.n_factors;
    ordered_json blocks = ordered_json::array();
    ordered_json pol_blocks = ordered_json::array();
    for (const auto& b : c.blocks) {
        ordered_json bj;
        bj["simples"] = plan_entries_json(b.simples);
        bj["k"] = b.k;
        bj["dim"] = b.dim;
        ordered_json proj = ordered_json::array();
        for (std::size_t r = 0; r < b.projector.rows(); ++r)
            for (std::size_t col = 0; col < b.projector.cols(); ++col)
                if (!b.projector(r, col).is_zero())
                    proj.push_back({{"row", r}, {"col", col}, {"val", b.projector(r, col).to_string()}});
        bj["projector"] = std::move(proj);
        ordered_json frames = ordered_json::array();
        for (const auto& f : b.frame) {
            ordered_json vec = ordered_json::array();
            for (const auto& x : f.vec) vec.push_back(to_json(x));
            frames.push_back({{"p", f.type.a}, {"q", f.type.b}, {"vector", std::move(vec)}, {"conj_scalar", to_json(f.conj_scalar)}});
        }
        bj["frames"] = std::move(frames);
        blocks.push_back(std::move(bj));
        pol_blocks.push_back({{"signs", b.signs}, {"gram", matrix_json(b.gram)}});
    }
    j["blocks"] = std::move(blocks);
    j["polarization"] = {{"base_form", matrix_json(base_polarization())},
                         {"ambient", "k-fold tensor power of base_form"},
                         {"blocks", std::move(pol_blocks)}};
    j["report"] = to_json(c.report);
    return j;
}

Rational rational_from_json(const ordered_json& j) {
    if (!j.is_string()) throw SchemaError("rational values must be strings \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

Gaussian gaussian_from_json(const ordered_json& j) {
    return {rational_from_json(field(j, "re")), rational_from_json(field(j, "im"))};
}

HodgeNumbers hodge_numbers_from_json(const ordered_json& j) {
    HodgeNumbers h;
    h.weight = small_int(field(j, "weight"), "weight");
    for (const auto& x : array(field(j, "g"), "g")) h.g.push_back(integer(x, "g entry"));
    return h;
}

RepObject rep_object_from_json(const ordered_json& j) {
    RepObject out;
    for (const auto& e : plan_entries_from_json(j, "labels")) {
        if (e.mult <= 0) throw SchemaError("multiplicities must be positive");
        out.add(e.label, e.mult);
    }
    return out;
}

Certificate certificate_from_json(const ordered_json& j) {
    try {
        Certificate c;
        const auto& version = field(j, "version");
        if (!version.is_string()) throw SchemaError("version must be a string");
        c.version = version.get<std::string>();
        if (c.version != "1") throw SchemaError("unsupported certificate version '" + c.version + "'");
        c.input = hodge_numbers_from_json(j);
        c.plan.weight = c.input.weight;
        c.plan.entries = plan_entries_from_json(field(j, "plan"), "plan");
        const auto& mode = field(j, "mode");
        if (!mode.is_string()) throw SchemaError("mode must be a string");
        try {
            c.mode = parse_mode(mode.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
        c.n_factors = integer(field(j, "N"), "N");

        const auto& blocks = array(field(j, "blocks"), "blocks");
        const auto& pol = field(j, "polarization");
        const auto& pol_blocks = array(field(pol, "blocks"), "polarization.blocks");
        if (pol_blocks.size() != blocks.size()) throw SchemaError("polarization must list one entry per block");
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            const auto& bj = blocks[bi];
            Block b;
            b.simples = plan_entries_from_json(field(bj, "simples"), "simples");
            b.k = small_int(field(bj, "k"), "k");
            const auto dim = integer(field(bj, "dim"), "dim");
            if (dim < 0 || dim > (1 << 16)) throw SchemaError("dim out of range");
            b.dim = static_cast<std::size_t>(dim);
            b.projector = QMatrix(b.dim, b.dim);
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (const auto& t : array(field(bj, "projector"), "projector")) {
                const auto r = integer(field(t, "row"), "row");
                const auto col = integer(field(t, "col"), "col");
                if (r < 0 || col < 0 || static_cast<std::size_t>(r) >= b.dim || static_cast<std::size_t>(col) >= b.dim)
                    throw SchemaError("projector entry out of range");
                const auto key = std::make_pair(static_cast<std::size_t>(r), static_cast<std::size_t>(col));
                if (!seen.insert(key).second) throw SchemaError("duplicate projector entry");
                b.projector(key.first, key.second) = rational_from_json(field(t, "val"));
            }
            for (const auto& f : array(field(bj, "frames"), "frames")) {
                FrameVector fv;
                fv.type = Character{small_int(field(f, "p"), "p"), small_int(field(f, "q"), "q")};
                for (const auto& x : array(field(f, "vector"), "vector")) fv.vec.push_back(gaussian_from_json(x));
                fv.conj_scalar = gaussian_from_json(field(f, "conj_scalar"));
                b.frame.push_back(std::move(fv));
            }
            const auto& pb = pol_blocks[bi];
            for (const auto& s : array(field(pb, "signs"), "signs")) b.signs.push_back(small_int(s, "sign"));
            b.gram = matrix_from_json(field(pb, "gram"));
            c.blocks.push_back(std::move(b));
        }
        c.report = report_from_json(field(j, "report"));
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(e.what());
    }
}

std::string dump_certificate(const Certificate& c) { return to_json(c).dump(1) + "\n"; }

Certificate parse_certificate(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

}  // namespace hodgeforge
