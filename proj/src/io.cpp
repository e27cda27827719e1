#include "spinexp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace spinexp {

namespace {

using nlohmann::json;

int require_dim(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw parse_error(std::string("matrix json: missing \"") + key + "\"");
  }
  const json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw parse_error(std::string("matrix json: \"") + key +
                      "\" must be an integer");
  }
  long long n = v.get<long long>();
  if (n < 1 || n > 64) {
    throw parse_error(std::string("matrix json: \"") + key +
                      "\" out of range [1, 64]");
  }
  return static_cast<int>(n);
}

double require_number(const json& v, int r, int c) {
  if (!v.is_number()) {
    std::ostringstream msg;
    msg << "matrix json: entry (" << r << ", " << c << ") is not a number";
    throw parse_error(msg.str());
  }
  double x = v.get<double>();
  if (!std::isfinite(x)) {
    std::ostringstream msg;
    msg << "matrix json: entry (" << r << ", " << c << ") is not finite";
    throw parse_error(msg.str());
  }
  return x;
}

void append_rows(std::ostringstream& out, int rows,
                 const std::function<void(std::ostringstream&, int)>& row) {
  for (int r = 0; r < rows; ++r) {
    out << "    [";
    row(out, r);
    out << (r + 1 < rows ? "],\n" : "]\n");
  }
}

std::string document(int rows, int cols, const char* field,
                     const std::function<void(std::ostringstream&, int)>& row) {
  std::ostringstream out;
  out << "{\n  \"rows\": " << rows << ",\n  \"cols\": " << cols
      << ",\n  \"field\": \"" << field << "\",\n  \"data\": [\n";
  append_rows(out, rows, row);
  out << "  ]\n}\n";
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw parse_error("write failed: " + path);
}

}  // namespace

MatrixFile parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("matrix json: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("matrix json: top level must be an object");

  MatrixFile mf;
  mf.rows = require_dim(j, "rows");
  mf.cols = require_dim(j, "cols");

  if (!j.contains("field") || !j.at("field").is_string()) {
    throw parse_error("matrix json: missing or non-string \"field\"");
  }
  std::string field = j.at("field").get<std::string>();
  if (field == "real") {
    mf.complex_field = false;
  } else if (field == "complex") {
    mf.complex_field = true;
  } else {
    throw parse_error("matrix json: \"field\" must be \"real\" or \"complex\"");
  }

  if (!j.contains("data") || !j.at("data").is_array()) {
    throw parse_error("matrix json: missing or non-array \"data\"");
  }
  const json& data = j.at("data");
  if (static_cast<int>(data.size()) != mf.rows) {
    throw parse_error("matrix json: \"data\" row count does not match \"rows\"");
  }

  mf.data = cmat::Zero(mf.rows, mf.cols);
  for (int r = 0; r < mf.rows; ++r) {
    const json& row = data.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != mf.cols) {
      std::ostringstream msg;
      msg << "matrix json: row " << r << " does not have \"cols\" entries";
      throw parse_error(msg.str());
    }
    for (int c = 0; c < mf.cols; ++c) {
      const json& e = row.at(c);
      if (mf.complex_field) {
        if (!e.is_array() || e.size() != 2) {
          std::ostringstream msg;
          msg << "matrix json: complex entry (" << r << ", " << c
              << ") must be a [re, im] pair";
          throw parse_error(msg.str());
        }
        mf.data(r, c) = cplx(require_number(e.at(0), r, c),
                             require_number(e.at(1), r, c));
      } else {
        mf.data(r, c) = require_number(e, r, c);
      }
    }
  }
  return mf;
}

MatrixFile read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string matrix_json(const rmat& m) {
  return document(static_cast<int>(m.rows()), static_cast<int>(m.cols()), "real",
                  [&](std::ostringstream& out, int r) {
                    for (int c = 0; c < m.cols(); ++c) {
                      if (c) out << ", ";
                      out << format_g17(m(r, c));
                    }
                  });
}

std::string matrix_json(const cmat& m) {
  return document(static_cast<int>(m.rows()), static_cast<int>(m.cols()),
                  "complex", [&](std::ostringstream& out, int r) {
                    for (int c = 0; c < m.cols(); ++c) {
                      if (c) out << ", ";
                      out << '[' << format_g17(m(r, c).real()) << ", "
                          << format_g17(m(r, c).imag()) << ']';
                    }
                  });
}

void write_matrix(const std::string& path, const rmat& m) {
  write_text(path, matrix_json(m));
}

void write_matrix(const std::string& path, const cmat& m) {
  write_text(path, matrix_json(m));
}

}  // namespace spinexp
