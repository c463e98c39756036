#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "matwig/io.hpp"
#include "matwig/mwd.hpp"

using namespace matwig;

namespace {

std::string tmp(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "matwig_test_io";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

bool bit_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

std::string config_error_of(const std::string& text) {
    try {
        io::parse_config(text);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::config);
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("binary round trip is bit-identical") {
    const Grid g = Grid::make(1, 32, 4);
    const auto F = mwd(preset::cohen(Mat::Constant(1, 1, 0.3)), hermite(1), gaussian(1), g);
    const auto p = tmp("f.bin");
    io::write_bin(p, io::to_array(F));
    const auto a = io::read_bin(p);
    CHECK(a.dims == std::vector<std::uint32_t>{32, 32});
    CHECK(bit_equal(a.values, F.values));
    const auto s = read_all(p);
    CHECK(s.substr(0, 4) == "MWD1");
    CHECK(s.size() == 4 + 4 + 8 + 32 * 32 * 16);

    std::ofstream(tmp("bad.bin"), std::ios::binary) << "XXXX";
    CHECK_THROWS_AS(io::read_bin(tmp("bad.bin")), Error);
}

TEST_CASE("CSV round trip is bit-identical") {
    const Grid g = Grid::make(1, 16, 4);
    const auto F = mwd(preset::rihaczek(1), hermite(2), gaussian(2), g);
    const auto p = tmp("f.csv");
    io::write_csv(p, F);
    CHECK(read_all(p).rfind("x,omega,re,im\n", 0) == 0);
    CHECK(bit_equal(io::read_csv_values(p), F.values));

    const auto v = hermite(3).on(g);
    io::write_csv(tmp("s.csv"), v, g);
    CHECK(read_all(tmp("s.csv")).rfind("t,re,im\n", 0) == 0);
    CHECK(bit_equal(io::read_csv_values(tmp("s.csv")), v));

    const Grid g2 = Grid::make(2, 4, 2);
    io::write_csv(tmp("f2.csv"), mwd(preset::wigner(2), gaussian(1, 2), gaussian(1, 2), g2));
    CHECK(read_all(tmp("f2.csv")).rfind("x1,x2,omega1,omega2,re,im\n", 0) == 0);
}

TEST_CASE("PGM output") {
    const Grid g = Grid::make(1, 32, 4);
    const auto F = mwd(preset::wigner(1), gaussian(1), gaussian(1), g);
    io::write_pgm(tmp("f.pgm"), F);
    const auto s = read_all(tmp("f.pgm"));
    const std::string header = "P5\n32 32\n255\n";
    REQUIRE(s.size() == header.size() + 32 * 32);
    CHECK(s.substr(0, header.size()) == header);
    CHECK(static_cast<unsigned char>(s[header.size() + 16 * 32 + 16]) == 255);
}

TEST_CASE("formats") {
    CHECK(io::parse_format("csv") == io::Format::csv);
    CHECK(io::parse_format("bin") == io::Format::bin);
    CHECK(io::parse_format("pgm") == io::Format::pgm);
    CHECK_THROWS_AS(io::parse_format("png"), Error);
}

TEST_CASE("config parsing") {
    const auto rc = io::parse_config(R"({
        "grid": {"dim": 1, "n": 64, "len": 8},
        "matrix": {"preset": "cohen", "M": 0.25},
        "signals": [{"kind": "hermite", "k": 2},
                    {"kind": "shifted", "base": {"kind": "gaussian"}, "x0": 0.5, "w0": 0.25},
                    {"kind": "sum", "terms": [{"kind": "hermite", "k": 0}, {"kind": "chirp", "rate": 0.5}], "coeffs": [1, [0, 2]]}],
        "symbol": {"kind": "chirped_gaussian", "a": 1, "c": 0.5},
        "output": {"format": "bin", "path": "out.bin"},
        "oversample": 2
    })");
    CHECK(rc.grid == Grid::make(1, 64, 8));
    REQUIRE(rc.matrix);
    CHECK(rc.matrix->entries()(0, 1) == doctest::Approx(0.75));
    CHECK(rc.signals.size() == 3);
    CHECK(std::abs(rc.signals[1](0.5) - std::polar(1.0, 2 * pi * 0.25 * 0.5)) < 1e-14);
    CHECK(std::abs(rc.signals[2](0.0) - (hermite(0)(0.0) + cplx(0, 2))) < 1e-14);
    REQUIRE(rc.symbol);
    const double x = 0.5, w = 0.5;
    CHECK(std::abs(rc.symbol->analytic(&x, &w) - std::polar(std::exp(-pi * 0.5), 2 * pi * 0.5 * 0.25)) < 1e-14);
    CHECK(rc.output.format == io::Format::bin);
    CHECK(rc.oversample == 2);

    const auto blocks = io::parse_matrix(R"({"blocks": {"A11": [[1]], "A12": 0.5, "A21": 1, "A22": -0.5}})", 1);
    CHECK((blocks.entries() - preset::wigner(1).entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("config errors name the field") {
    CHECK(config_error_of(R"({"matrix": {"preset": "bogus"}})").find("matrix.preset") != std::string::npos);
    CHECK(config_error_of(R"({"matrix": {"preset": "cohen"}})").find("matrix.M") != std::string::npos);
    CHECK(config_error_of(R"({"matrix": {"blocks": {"A11": 1, "A12": 1, "A21": 1, "A22": 1}}})").find("matrix") != std::string::npos);
    CHECK(config_error_of(R"({"signals": [{"kind": "gaussian", "lambda": -1}]})").find("signals[0]") != std::string::npos);
    CHECK(config_error_of(R"({"signals": [{"kind": "hermite", "k": 1.5}]})").find("signals[0].k") != std::string::npos);
    CHECK(config_error_of(R"({"symbol": {"kind": "gaussian", "a": 0}})").find("symbol.a") != std::string::npos);
    CHECK(config_error_of(R"({"symbol": {"kind": "file", "path": "missing.bin"}})").find("missing.bin") != std::string::npos);
    CHECK(config_error_of(R"({"grid": {"n": 100}})").find("grid") != std::string::npos);
    CHECK_FALSE(config_error_of("{not json").empty());
}
