// SPDX-License-Identifier: Apache-2.0
#include "matwig/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "matwig/quantize.hpp"

namespace matwig::io {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(Errc::config, what); }

void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = char((v >> (8 * i)) & 0xff);
    os.write(b, 4);
}

void put_f64(std::ostream& os, double d) {
    const auto v = std::bit_cast<std::uint64_t>(d);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = char((v >> (8 * i)) & 0xff);
    os.write(b, 8);
}

std::uint64_t get_le(std::istream& is, int bytes) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), bytes)) config_error("truncated binary array");
    std::uint64_t v = 0;
    for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

std::ofstream open_out(const std::string& path, bool binary) {
    std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
    if (!os) throw Error(Errc::config, "cannot open '" + path + "' for writing");
    return os;
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_bin(const std::string& path, const Array& a) {
    auto os = open_out(path, true);
    os.write("MWD1", 4);
    put_u32(os, std::uint32_t(a.dims.size()));
    for (auto d : a.dims) put_u32(os, d);
    for (const auto& v : a.values) {
        put_f64(os, v.real());
        put_f64(os, v.imag());
    }
}

Array read_bin(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) config_error("cannot open '" + path + "'");
    char magic[4];
    if (!is.read(magic, 4) || std::string(magic, 4) != "MWD1") config_error("'" + path + "' is not an MWD1 array");
    Array a;
    const auto rank = std::uint32_t(get_le(is, 4));
    if (rank == 0 || rank > 8) config_error("'" + path + "': bad rank");
    std::size_t count = 1;
    for (std::uint32_t i = 0; i < rank; ++i) {
        a.dims.push_back(std::uint32_t(get_le(is, 4)));
        count *= a.dims.back();
    }
    a.values.resize(count);
    for (auto& v : a.values) {
        const double re = std::bit_cast<double>(get_le(is, 8));
        const double im = std::bit_cast<double>(get_le(is, 8));
        v = {re, im};
    }
    return a;
}

Array to_array(const Field2& F) {
    Array a;
    for (int r = 0; r < 2 * F.grid.dim; ++r) a.dims.push_back(std::uint32_t(F.grid.n));
    a.values = F.values;
    return a;
}

Array to_array(const std::vector<cplx>& v, const Grid& g) {
    Array a;
    for (int r = 0; r < g.dim; ++r) a.dims.push_back(std::uint32_t(g.n));
    a.values = v;
    return a;
}

void write_csv(const std::string& path, const Field2& F) {
    auto os = open_out(path, false);
    const int d = F.grid.dim;
    os << (d == 1 ? "x,omega,re,im\n" : "x1,x2,omega1,omega2,re,im\n");
    const std::size_t N = F.size();
    double x[2], w[2];
    for (std::size_t i = 0; i < N; ++i) {
        F.coord1(i, x);
        for (std::size_t j = 0; j < N; ++j) {
            F.coord2(j, w);
            for (int a = 0; a < d; ++a) os << fmt17(x[a]) << ',';
            for (int a = 0; a < d; ++a) os << fmt17(w[a]) << ',';
            const cplx v = F.at(i, j);
            os << fmt17(v.real()) << ',' << fmt17(v.imag()) << '\n';
        }
    }
}

void write_csv(const std::string& path, const std::vector<cplx>& v, const Grid& g) {
    auto os = open_out(path, false);
    const int d = g.dim;
    os << (d == 1 ? "t,re,im\n" : "t1,t2,re,im\n");
    double t[2];
    for (std::size_t i = 0; i < v.size(); ++i) {
        g.point(i, t);
        for (int a = 0; a < d; ++a) os << fmt17(t[a]) << ',';
        os << fmt17(v[i].real()) << ',' << fmt17(v[i].imag()) << '\n';
    }
}

std::vector<cplx> read_csv_values(const std::string& path) {
    std::ifstream is(path);
    if (!is) config_error("cannot open '" + path + "'");
    std::string line;
    std::getline(is, line);
    std::vector<cplx> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto last = line.rfind(',');
        const auto prev = line.rfind(',', last - 1);
        if (last == std::string::npos || prev == std::string::npos) config_error("'" + path + "': malformed row");
        out.emplace_back(std::stod(line.substr(prev + 1, last - prev - 1)), std::stod(line.substr(last + 1)));
    }
    return out;
}

void write_pgm(const std::string& path, const Field2& F) {
    const std::size_t N = F.size();
    double mx = 0;
    for (const auto& v : F.values) mx = std::max(mx, std::abs(v));
    auto os = open_out(path, true);
    os << "P5\n" << N << ' ' << N << "\n255\n";
    std::vector<unsigned char> px(F.values.size());
    for (std::size_t k = 0; k < px.size(); ++k)
        px[k] = mx > 0 ? static_cast<unsigned char>(std::lround(255.0 * std::abs(F.values[k]) / mx)) : 0;
    os.write(reinterpret_cast<const char*>(px.data()), std::streamsize(px.size()));
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "bin") return Format::bin;
    if (s == "pgm") return Format::pgm;
    config_error("output.format: unknown format '" + s + "'");
}

// ---- JSON ----

namespace {

json parse_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        config_error(std::string(what) + ": invalid JSON (" + e.what() + ")");
    }
}

double num(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) config_error(where + "." + key + ": missing");
    if (!j[key].is_number()) config_error(where + "." + key + ": expected a number");
    return j[key].get<double>();
}

double num_or(const json& j, const std::string& key, double def, const std::string& where) {
    return j.contains(key) ? num(j, key, where) : def;
}

// Accepts a scalar (times identity) or a d x d row-major nested array.
Mat square(const json& j, int d, const std::string& where) {
    if (j.is_number()) return j.get<double>() * Mat::Identity(d, d);
    if (!j.is_array() || int(j.size()) != d) config_error(where + ": expected a number or a " + std::to_string(d) + "x" + std::to_string(d) + " array");
    Mat m(d, d);
    for (int r = 0; r < d; ++r) {
        if (!j[r].is_array() || int(j[r].size()) != d) config_error(where + ": row " + std::to_string(r) + " has wrong length");
        for (int c = 0; c < d; ++c) {
            if (!j[r][c].is_number()) config_error(where + ": non-numeric entry");
            m(r, c) = j[r][c].get<double>();
        }
    }
    return m;
}

std::vector<double> point(const json& j, int d, const std::string& where) {
    if (j.is_number() && d == 1) return {j.get<double>()};
    if (!j.is_array() || int(j.size()) != d) config_error(where + ": expected " + std::to_string(d) + " coordinates");
    std::vector<double> p;
    for (const auto& v : j) {
        if (!v.is_number()) config_error(where + ": non-numeric coordinate");
        p.push_back(v.get<double>());
    }
    return p;
}

cplx coeff(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
    config_error(where + ": expected a number or [re, im]");
}

std::string str(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string()) config_error(where + "." + key + ": expected a string");
    return j[key].get<std::string>();
}

std::string resolve(const std::string& base, const std::string& p) {
    const std::filesystem::path path(p);
    const auto full = path.is_absolute() ? path : std::filesystem::path(base) / path;
    if (!std::filesystem::exists(full)) config_error("file '" + full.string() + "' does not exist");
    return full.string();
}

BlockMatrix matrix_from(const json& j, int d, const std::string& where) {
    if (!j.is_object()) config_error(where + ": expected an object");
    try {
        if (j.contains("blocks")) {
            const auto& b = j["blocks"];
            const std::string w = where + ".blocks";
            for (const char* k : {"A11", "A12", "A21", "A22"})
                if (!b.contains(k)) config_error(w + "." + k + ": missing");
            return BlockMatrix::make(square(b["A11"], d, w + ".A11"), square(b["A12"], d, w + ".A12"),
                                     square(b["A21"], d, w + ".A21"), square(b["A22"], d, w + ".A22"));
        }
        const std::string p = str(j, "preset", where);
        if (p == "wigner") return preset::wigner(d);
        if (p == "tau") return preset::tau(num(j, "tau", where), d);
        if (p == "stft") return preset::stft(d);
        if (p == "ambiguity") return preset::ambiguity(d);
        if (p == "rihaczek") return preset::rihaczek(d);
        if (p == "identity") return preset::identity(d);
        if (p == "cohen") {
            if (!j.contains("M")) config_error(where + ".M: missing");
            return preset::cohen(square(j["M"], d, where + ".M"));
        }
        if (p == "affine") {
            if (!j.contains("T")) config_error(where + ".T: missing");
            return preset::affine(square(j["T"], d, where + ".T"));
        }
        config_error(where + ".preset: unknown preset '" + p + "'");
    } catch (const Error& e) {
        if (e.code() == Errc::config) throw;
        config_error(where + ": " + e.what());
    }
}

Signal signal_from(const json& j, const Grid& grid, const std::string& where, const std::string& base) {
    if (!j.is_object()) config_error(where + ": expected an object");
    const int d = grid.dim;
    const std::string kind = str(j, "kind", where);
    try {
        if (kind == "gaussian") return gaussian(num_or(j, "lambda", 1.0, where), d);
        if (kind == "hermite") {
            if (d != 1) config_error(where + ": hermite signals are one-dimensional");
            const double k = num(j, "k", where);
            if (k < 0 || k > 32 || k != std::floor(k)) config_error(where + ".k: expected an integer in [0, 32]");
            return hermite(int(k));
        }
        if (kind == "chirp") return chirp(num(j, "rate", where), d);
        if (kind == "shifted") {
            if (!j.contains("base")) config_error(where + ".base: missing");
            const Signal b = signal_from(j["base"], grid, where + ".base", base);
            const auto x0 = j.contains("x0") ? point(j["x0"], d, where + ".x0") : std::vector<double>(d, 0.0);
            const auto w0 = j.contains("w0") ? point(j["w0"], d, where + ".w0") : std::vector<double>(d, 0.0);
            return tf_shift(b, x0, w0, &grid);
        }
        if (kind == "sum") {
            if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
                config_error(where + ".terms: expected a non-empty array");
            std::vector<Signal> terms;
            for (std::size_t i = 0; i < j["terms"].size(); ++i)
                terms.push_back(signal_from(j["terms"][i], grid, where + ".terms[" + std::to_string(i) + "]", base));
            std::vector<cplx> cs;
            if (j.contains("coeffs")) {
                if (!j["coeffs"].is_array() || j["coeffs"].size() != terms.size())
                    config_error(where + ".coeffs: expected one coefficient per term");
                for (std::size_t i = 0; i < terms.size(); ++i) cs.push_back(coeff(j["coeffs"][i], where + ".coeffs"));
            }
            return sum(terms, cs);
        }
        if (kind == "file") {
            const auto a = read_bin(resolve(base, str(j, "path", where)));
            if (a.values.size() != grid.size()) config_error(where + ".path: sample count does not match the grid");
            return Signal::sampled(grid, a.values, Domain::time, "file");
        }
        config_error(where + ".kind: unknown signal kind '" + kind + "'");
    } catch (const Error& e) {
        if (e.code() == Errc::config) throw;
        config_error(where + ": " + e.what());
    }
}

SymbolField symbol_from(const json& j, const Grid& grid, const std::string& where, const std::string& base) {
    if (!j.is_object()) config_error(where + ": expected an object");
    const int d = grid.dim;
    const std::string kind = str(j, "kind", where);
    if (kind == "constant") {
        const cplx c = j.contains("value") ? coeff(j["value"], where + ".value") : cplx(1);
        return symbol_from_function([c](const double*, const double*) { return c; }, grid, "constant");
    }
    if (kind == "gaussian" || kind == "chirped_gaussian") {
        const double a = num_or(j, "a", 1.0, where);
        const double c = kind == "chirped_gaussian" ? num(j, "c", where) : 0.0;
        if (!(a > 0)) config_error(where + ".a: must be positive");
        return symbol_from_function(
            [a, c, d](const double* x, const double* w) {
                double r = 0, xw = 0;
                for (int k = 0; k < d; ++k) {
                    r += x[k] * x[k] + w[k] * w[k];
                    xw += x[k] * w[k];
                }
                return std::polar(std::exp(-pi * a * r), 2 * pi * c * xw);
            },
            grid, kind);
    }
    if (kind == "file") {
        const auto a = read_bin(resolve(base, str(j, "path", where)));
        if (a.values.size() != grid.size() * grid.size()) config_error(where + ".path: sample count does not match the grid");
        return symbol_from_samples(grid, a.values, "file");
    }
    config_error(where + ".kind: unknown symbol kind '" + kind + "'");
}

Grid grid_from(const json& j) {
    if (!j.contains("grid")) return default_grid(1);
    const auto& g = j["grid"];
    if (!g.is_object()) config_error("grid: expected an object");
    const int dim = int(num_or(g, "dim", 1, "grid"));
    if (dim != 1 && dim != 2) config_error("grid.dim: must be 1 or 2");
    const Grid def = default_grid(dim);
    try {
        return Grid::make(dim, int(num_or(g, "n", def.n, "grid")), num_or(g, "len", def.len, "grid"));
    } catch (const Error& e) {
        config_error(std::string("grid: ") + e.what());
    }
}

}  // namespace

BlockMatrix parse_matrix(const std::string& text, int dim) { return matrix_from(parse_text(text, "matrix"), dim, "matrix"); }

Signal parse_signal(const std::string& text, const Grid& grid) {
    return signal_from(parse_text(text, "signal"), grid, "signal", ".");
}

SymbolField parse_symbol(const std::string& text, const Grid& grid, const std::string& base) {
    return symbol_from(parse_text(text, "symbol"), grid, "symbol", base);
}

RunConfig parse_config(const std::string& text, const std::string& base) {
    const json j = parse_text(text, "config");
    if (!j.is_object()) config_error("config: expected an object");
    RunConfig rc;
    rc.grid = grid_from(j);
    if (j.contains("matrix")) rc.matrix = matrix_from(j["matrix"], rc.grid.dim, "matrix");
    if (j.contains("signals")) {
        if (!j["signals"].is_array()) config_error("signals: expected an array");
        for (std::size_t i = 0; i < j["signals"].size(); ++i)
            rc.signals.push_back(signal_from(j["signals"][i], rc.grid, "signals[" + std::to_string(i) + "]", base));
    }
    if (j.contains("symbol")) rc.symbol = symbol_from(j["symbol"], rc.grid, "symbol", base);
    if (j.contains("output")) {
        const auto& o = j["output"];
        if (!o.is_object()) config_error("output: expected an object");
        if (o.contains("format")) rc.output.format = parse_format(str(o, "format", "output"));
        if (o.contains("path")) rc.output.path = str(o, "path", "output");
    }
    if (j.contains("oversample")) {
        const double os = num(j, "oversample", "config");
        if (os < 1 || os > 4 || os != std::floor(os)) config_error("oversample: expected an integer in [1, 4]");
        rc.oversample = int(os);
    }
    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) config_error("cannot read config '" + path + "'");
    std::stringstream ss;
    ss << is.rdbuf();
    const auto dir = std::filesystem::path(path).parent_path();
    return parse_config(ss.str(), dir.empty() ? "." : dir.string());
}

}  // namespace matwig::io
