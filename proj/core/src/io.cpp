#include "qglab/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qglab/errors.hpp"

namespace qglab {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::ParseError, path + ": " + what);
}

Complex parse_complex(const json& j, const std::string& path) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        parse_fail(path, "expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

const json& array_of(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an array");
    if (j.size() != n) parse_fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
    return j;
}

Vec parse_vec(const json& j, std::size_t n, const std::string& path) {
    array_of(j, n, path);
    Vec v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        v(static_cast<Eigen::Index>(i)) = parse_complex(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

Mat parse_mat(const json& j, std::size_t n, const std::string& path) {
    array_of(j, n, path);
    Mat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) m.row(static_cast<Eigen::Index>(r)) = parse_vec(j[r], n, path + "[" + std::to_string(r) + "]").transpose();
    return m;
}

Tensor3 parse_tensor(const json& j, std::size_t n, const std::string& path) {
    array_of(j, n, path);
    Tensor3 t(n);
    for (std::size_t a = 0; a < n; ++a) {
        const Mat m = parse_mat(j[a], n, path + "[" + std::to_string(a) + "]");
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) t(a, b, c) = m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(c));
    }
    return t;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json vec_json(const Vec& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

json mat_json(const Mat& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r).transpose()));
    return out;
}

json tensor_json(const Tensor3& t) {
    const std::size_t n = t.dim();
    json out = json::array();
    for (std::size_t a = 0; a < n; ++a) {
        json slab = json::array();
        for (std::size_t b = 0; b < n; ++b) {
            json row = json::array();
            for (std::size_t c = 0; c < n; ++c) row.push_back(complex_json(t(a, b, c)));
            slab.push_back(std::move(row));
        }
        out.push_back(std::move(slab));
    }
    return out;
}

json to_json(const HopfData& d) {
    json j;
    j["dim"] = d.dim;
    j["labels"] = d.labels;
    j["mult"] = tensor_json(d.mult);
    j["unit"] = vec_json(d.unit);
    j["comult"] = tensor_json(d.comult);
    j["counit"] = vec_json(d.counit);
    j["antipode"] = mat_json(d.antipode);
    j["star"] = mat_json(d.star);
    if (d.haar) j["haar"] = vec_json(*d.haar);
    return j;
}

}  // namespace

HopfData parse_quantum_group(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail("$", e.what());
    }
    if (!j.is_object()) parse_fail("$", "expected an object");
    auto field = [&](const char* name) -> const json& {
        if (!j.contains(name)) parse_fail(std::string("$.") + name, std::string("missing field \"") + name + "\"");
        return j.at(name);
    };
    const json& dim = field("dim");
    if (!dim.is_number_integer() || dim.get<long long>() <= 0) parse_fail("$.dim", "must be a positive integer");
    HopfData d;
    d.dim = dim.get<std::size_t>();
    const std::size_t n = d.dim;
    d.mult = parse_tensor(field("mult"), n, "$.mult");
    d.unit = parse_vec(field("unit"), n, "$.unit");
    d.comult = parse_tensor(field("comult"), n, "$.comult");
    d.counit = parse_vec(field("counit"), n, "$.counit");
    d.antipode = parse_mat(field("antipode"), n, "$.antipode");
    d.star = parse_mat(field("star"), n, "$.star");
    if (j.contains("haar") && !j["haar"].is_null()) d.haar = parse_vec(j["haar"], n, "$.haar");
    if (j.contains("labels")) {
        const json& l = array_of(j["labels"], n, "$.labels");
        for (std::size_t i = 0; i < n; ++i) {
            if (!l[i].is_string()) parse_fail("$.labels[" + std::to_string(i) + "]", "expected a string");
            d.labels.push_back(l[i].get<std::string>());
        }
    }
    return d;
}

std::string dump_quantum_group(const HopfData& data, int indent) { return to_json(data).dump(indent) + "\n"; }

HopfData load_quantum_group(const std::string& path) { return parse_quantum_group(read_file(path)); }

void save_quantum_group(const HopfData& data, const std::string& path) { write_file(path, dump_quantum_group(data)); }

std::string content_hash(const HopfData& data) {
    const std::string s = to_json(data).dump();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, path + ": cannot write file");
    out << text;
}

}  // namespace qglab
