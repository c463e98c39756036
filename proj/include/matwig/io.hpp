// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matwig/blockmat.hpp"
#include "matwig/field.hpp"
#include "matwig/signals.hpp"

namespace matwig::io {

// "MWD1", u32 LE rank, u32 LE dims..., f64 LE (re, im) pairs in row-major order.
struct Array {
    std::vector<std::uint32_t> dims;
    std::vector<cplx> values;
};

void write_bin(const std::string& path, const Array& a);
Array read_bin(const std::string& path);

Array to_array(const Field2& F);
Array to_array(const std::vector<cplx>& v, const Grid& g);

// Fields: "x,omega,re,im" (d = 1) or "x1,x2,omega1,omega2,re,im" (d = 2).
// Signals: "t,re,im" or "t1,t2,re,im". Numbers use 17 significant digits.
void write_csv(const std::string& path, const Field2& F);
void write_csv(const std::string& path, const std::vector<cplx>& v, const Grid& g);
std::vector<cplx> read_csv_values(const std::string& path);

// Binary P5 of |F| normalized to max 255; rows are x, columns are w.
void write_pgm(const std::string& path, const Field2& F);

enum class Format { csv, bin, pgm };
Format parse_format(const std::string& s);

// JSON configuration. Errors are Error(Errc::config) naming the offending field.
BlockMatrix parse_matrix(const std::string& json_text, int dim);
Signal parse_signal(const std::string& json_text, const Grid& grid);
SymbolField parse_symbol(const std::string& json_text, const Grid& grid, const std::string& base_dir = ".");

struct OutputConfig {
    Format format = Format::csv;
    std::string path;
};

struct RunConfig {
    Grid grid;
    std::optional<BlockMatrix> matrix;
    std::vector<Signal> signals;
    std::optional<SymbolField> symbol;
    OutputConfig output;
    int oversample = 1;
};

RunConfig parse_config(const std::string& json_text, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path);

}  // namespace matwig::io
