#include "dcx/io.hpp"

#include <fstream>
#include <sstream>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

int get_int(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer()) {
    throw ParseError(std::string("expected integer field '") + key + "'");
  }
  return obj[key].get<int>();
}

Scalar scalar_from_json(const Json& v, const FieldSpec& field) {
  if (v.is_string()) return parse_scalar(v.get<std::string>(), field);
  if (v.is_number_integer()) return Scalar::from_integer(v.get<long>(), field);
  throw ParseError("matrix entries must be strings or integers");
}

Matrix matrix_from_json(const Json& rows, const FieldSpec& field, Index expected_rows, Index expected_cols) {
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  if (static_cast<Index>(rows.size()) != expected_rows) {
    throw DimensionMismatch("matrix has " + std::to_string(rows.size()) + " rows, expected " +
                            std::to_string(expected_rows));
  }
  Matrix m(expected_rows, expected_cols);
  for (Index r = 0; r < expected_rows; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != expected_cols) {
      throw DimensionMismatch("matrix row " + std::to_string(r) + " must have " + std::to_string(expected_cols) +
                              " entries");
    }
    for (Index c = 0; c < expected_cols; ++c) m(r, c) = scalar_from_json(row[static_cast<std::size_t>(c)], field);
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json complex_to_json(const DoubleComplex& a) {
  Json doc;
  doc["field"] = a.field().tag();
  Json comps = Json::array();
  for (const auto& [bd, n] : a.dims()) comps.push_back({{"p", bd.first}, {"q", bd.second}, {"dim", n}});
  doc["components"] = std::move(comps);
  for (int which = 1; which <= 2; ++which) {
    Json maps = Json::array();
    for (const auto& [bd, m] : which == 1 ? a.d1_maps() : a.d2_maps()) {
      if (is_zero(m)) continue;
      maps.push_back({{"p", bd.first}, {"q", bd.second}, {"matrix", matrix_to_json(m)}});
    }
    doc[which == 1 ? "d1" : "d2"] = std::move(maps);
  }
  return doc;
}

DoubleComplex complex_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("complex document must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "field" && key != "components" && key != "d1" && key != "d2")
      throw ParseError("unexpected key '" + key + "' in complex document");
  const FieldSpec field = FieldSpec::parse(doc.value("field", std::string("Q")));
  DoubleComplex a(field);
  if (doc.contains("components")) {
    if (!doc["components"].is_array()) throw ParseError("'components' must be an array");
    for (const Json& c : doc["components"]) {
      const int p = get_int(c, "p"), q = get_int(c, "q"), n = get_int(c, "dim");
      if (n < 0) throw ParseError("negative dimension");
      if (a.dim(p, q) != 0) throw ParseError("component (" + std::to_string(p) + "," + std::to_string(q) + ") repeated");
      a.set_dim(p, q, n);
    }
  }
  for (int which = 1; which <= 2; ++which) {
    const char* key = which == 1 ? "d1" : "d2";
    if (!doc.contains(key)) continue;
    if (!doc[key].is_array()) throw ParseError(std::string("'") + key + "' must be an array");
    for (const Json& e : doc[key]) {
      const int p = get_int(e, "p"), q = get_int(e, "q");
      const int tp = which == 1 ? p + 1 : p, tq = which == 1 ? q : q + 1;
      if (!e.contains("matrix")) throw ParseError(std::string(key) + " entry without 'matrix'");
      Matrix m;
      try {
        m = matrix_from_json(e["matrix"], field, a.dim(tp, tq), a.dim(p, q));
      } catch (const DimensionMismatch& err) {
        throw DimensionMismatch(std::string(key) + " at (" + std::to_string(p) + "," + std::to_string(q) +
                                "): " + err.what());
      }
      if (which == 1) a.set_d1(p, q, m);
      else a.set_d2(p, q, m);
    }
  }
  return a;
}

Json multiplicities_to_json(const MultiplicityVector& m) {
  Json list = Json::array();
  for (const auto& [s, c] : m.entries()) list.push_back({{"shape", s.label()}, {"count", c}});
  Json doc;
  doc["multiplicities"] = std::move(list);
  return doc;
}

MultiplicityVector multiplicities_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("multiplicities") || !doc["multiplicities"].is_array()) {
    throw ParseError("multiplicity document needs a 'multiplicities' array");
  }
  MultiplicityVector m;
  for (const Json& e : doc["multiplicities"]) {
    if (!e.is_object() || !e.contains("shape") || !e["shape"].is_string()) throw ParseError("entry without 'shape'");
    const int c = get_int(e, "count");
    if (c < 0) throw ParseError("negative multiplicity");
    m.add(Shape::parse(e["shape"].get<std::string>()), c);
  }
  return m;
}

LieData lie_data_from_json(const Json& doc) {
  const int dim = get_int(doc, "dim");
  if (dim <= 0) throw ParseError("'dim' must be positive");
  LieData data(dim);
  const FieldSpec q = FieldSpec::rationals();
  if (doc.contains("brackets")) {
    for (const Json& b : doc["brackets"]) {
      if (!b.is_array() || b.size() != 4) throw ParseError("bracket entries are [i, j, k, value]");
      const int i = b[0].get<int>() - 1, j = b[1].get<int>() - 1, k = b[2].get<int>() - 1;
      if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim) throw ParseError("bracket index out of range");
      data.set_bracket(i, j, k, scalar_from_json(b[3], q).real());
    }
  }
  if (!doc.contains("J")) throw ParseError("Lie data needs 'J'");
  const Matrix jm = matrix_from_json(doc["J"], q, dim, dim);
  std::vector<std::vector<mpq_class>> j(static_cast<std::size_t>(dim), std::vector<mpq_class>(dim));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) j[r][c] = jm(r, c).real();
  data.set_complex_structure(std::move(j));
  return data;
}

Json lie_data_to_json(const LieData& data) {
  Json doc;
  doc["dim"] = data.dim();
  Json brackets = Json::array();
  for (int i = 0; i < data.dim(); ++i)
    for (int j = i + 1; j < data.dim(); ++j)
      for (int k = 0; k < data.dim(); ++k)
        if (sgn(data.c(i, j, k)) != 0) brackets.push_back({i + 1, j + 1, k + 1, data.c(i, j, k).get_str()});
  doc["brackets"] = std::move(brackets);
  Json jrows = Json::array();
  for (const auto& row : data.complex_structure()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    jrows.push_back(std::move(r));
  }
  doc["J"] = std::move(jrows);
  return doc;
}

std::map<Bidegree, int> hodge_table_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("hodge") || !doc["hodge"].is_array()) {
    throw ParseError("Hodge document needs a 'hodge' array");
  }
  std::map<Bidegree, int> table;
  for (const Json& e : doc["hodge"]) {
    const int h = get_int(e, "h");
    if (h < 0) throw ParseError("negative Hodge number");
    table[{get_int(e, "p"), get_int(e, "q")}] += h;
  }
  return table;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

}  // namespace dcx
