#include "opsplit/algfile.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace opsplit {

using nlohmann::json;

namespace {

json scalar_to_json(const Scalar& s) { return s.coeff_str(); }

Scalar scalar_from_json(const json& j, const Field& f) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    if (j.is_number_integer()) return Scalar::from_integer(j.get<long>(), f);
    throw ParseError("coefficient must be a string or an integer, got " + j.dump());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const Field& f,
                        const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError(what + ": row " + std::to_string(i) + " must have " +
                             std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = scalar_from_json(row[c], f);
    }
    return m;
}

std::size_t index_from_json(const json& j, std::size_t bound, const std::string& what) {
    if (!j.is_number_integer() || j.get<long>() < 0)
        throw ParseError(what + ": index must be a nonnegative integer");
    auto v = j.get<std::size_t>();
    if (v >= bound)
        throw ParseError(what + ": index " + std::to_string(v) + " out of range (dim " +
                         std::to_string(bound) + ")");
    return v;
}

} // namespace

json to_json(const AlgebraFile& f) {
    json j;
    j["dim"] = f.algebra.dim;
    j["field"] = f.algebra.field.str();
    json ops = json::object();
    for (const auto& [name, t] : f.algebra.ops) {
        json triplets = json::array();
        for (std::size_t i = 0; i < t.dim(); ++i)
            for (std::size_t jj = 0; jj < t.dim(); ++jj)
                for (std::size_t k = 0; k < t.dim(); ++k)
                    if (!t.at(i, jj, k).is_zero())
                        triplets.push_back(json::array(
                            {i, jj, k, scalar_to_json(t.at(i, jj, k))}));
        ops[name] = std::move(triplets);
    }
    j["ops"] = std::move(ops);
    if (!f.forms.empty()) {
        json forms = json::object();
        for (const auto& [name, b] : f.forms) forms[name] = matrix_to_json(b.gram);
        j["forms"] = std::move(forms);
    }
    if (!f.reps.empty()) {
        json reps = json::object();
        for (const auto& [name, r] : f.reps) {
            json rep;
            rep["module_dim"] = r.module_dim;
            auto maps_to_json = [&](const std::vector<Matrix>& maps) {
                json arr = json::array();
                for (const auto& m : maps) arr.push_back(matrix_to_json(m));
                return arr;
            };
            if (!r.mu.empty()) rep["mu"] = maps_to_json(r.mu);
            if (!r.rho.empty()) rep["rho"] = maps_to_json(r.rho);
            reps[name] = std::move(rep);
        }
        j["reps"] = std::move(reps);
    }
    return j;
}

AlgebraFile algebra_file_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("document root must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 0)
        throw ParseError("\"dim\" must be a nonnegative integer");
    if (!j.contains("field") || !j["field"].is_string())
        throw ParseError("\"field\" must be \"Q\" or \"F<p>\"");

    AlgebraFile f;
    const auto dim = j["dim"].get<std::size_t>();
    const Field field = Field::parse(j["field"].get<std::string>());
    f.algebra = Algebra(dim, field);

    if (j.contains("ops")) {
        if (!j["ops"].is_object()) throw ParseError("\"ops\" must be an object");
        for (const auto& [name, triplets] : j["ops"].items()) {
            if (!triplets.is_array())
                throw ParseError("op \"" + name + "\" must be a list of [i,j,k,coeff]");
            OpTensor t(dim, field);
            std::set<std::array<std::size_t, 3>> seen;
            for (const auto& entry : triplets) {
                if (!entry.is_array() || entry.size() != 4)
                    throw ParseError("op \"" + name + "\": entries are [i,j,k,coeff]");
                std::array<std::size_t, 3> idx{
                    index_from_json(entry[0], dim, "op \"" + name + "\""),
                    index_from_json(entry[1], dim, "op \"" + name + "\""),
                    index_from_json(entry[2], dim, "op \"" + name + "\"")};
                if (!seen.insert(idx).second)
                    throw ParseError("op \"" + name + "\": duplicate entry [" +
                                     std::to_string(idx[0]) + "," + std::to_string(idx[1]) +
                                     "," + std::to_string(idx[2]) + "]");
                t.at(idx[0], idx[1], idx[2]) = scalar_from_json(entry[3], field);
            }
            f.algebra.add_op(name, std::move(t));
        }
    }

    if (j.contains("forms")) {
        if (!j["forms"].is_object()) throw ParseError("\"forms\" must be an object");
        for (const auto& [name, g] : j["forms"].items())
            f.forms[name] = BilinForm{matrix_from_json(g, dim, dim, field, "form \"" + name + "\"")};
    }

    if (j.contains("reps")) {
        if (!j["reps"].is_object()) throw ParseError("\"reps\" must be an object");
        for (const auto& [name, rj] : j["reps"].items()) {
            if (!rj.is_object() || !rj.contains("module_dim") ||
                !rj["module_dim"].is_number_integer())
                throw ParseError("rep \"" + name + "\" needs an integer \"module_dim\"");
            RepTriple r;
            r.base = f.algebra;
            r.module_dim = rj["module_dim"].get<std::size_t>();
            auto maps_from_json = [&](const json& arr, const char* which) {
                if (!arr.is_array() || arr.size() != dim)
                    throw ParseError("rep \"" + name + "\": \"" + which + "\" needs " +
                                     std::to_string(dim) + " matrices");
                std::vector<Matrix> maps;
                for (std::size_t i = 0; i < dim; ++i)
                    maps.push_back(matrix_from_json(arr[i], r.module_dim, r.module_dim, field,
                                                    "rep \"" + name + "\" " + which));
                return maps;
            };
            if (rj.contains("mu")) r.mu = maps_from_json(rj["mu"], "mu");
            if (rj.contains("rho")) r.rho = maps_from_json(rj["rho"], "rho");
            f.reps[name] = std::move(r);
        }
    }
    return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("\"" + path + "\": " + e.what());
    }
    return algebra_file_from_json(j);
}

void save_algebra_file(const std::string& path, const AlgebraFile& f) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write \"" + path + "\"");
    out << to_json(f).dump(2) << "\n";
}

std::string matrix_to_string(const Matrix& m) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m.at(i, j).str();
    }
    out << "]";
    return out.str();
}

} // namespace opsplit
