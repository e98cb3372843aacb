#include "hermult/io.hpp"

#include <cmath>
#include <cstdio>

#include "hermult/errors.hpp"

namespace hermult {

std::string format_double(double v) {
  if (!std::isfinite(v)) {
    throw DomainError("cannot serialize a non-finite number");
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string out(buf);
  if (out.find_first_of(".eE") == std::string::npos) {
    out += ".0";
  }
  return out;
}

namespace {

void dump_into(const Json& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(item, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) {
          out += ',';
        }
        dump_into(value[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = value.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      break;
    }
    default:
      out += value.dump();
  }
}

template <typename F>
auto require_array(const Json& j, const char* what, F&& each) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(std::string(what) + " must be a non-empty JSON array");
  }
  for (const auto& item : j) {
    each(item);
  }
}

}  // namespace

std::string dump_json(const Json& value) {
  std::string out;
  dump_into(value, out);
  return out;
}

Json to_json(const MultiIndex& k) { return Json(std::vector<unsigned>(k.parts().begin(), k.parts().end())); }

MultiIndex multiindex_from_json(const Json& j) {
  std::vector<unsigned> parts;
  require_array(j, "multi-index", [&](const Json& item) {
    if (!item.is_number_unsigned() && !(item.is_number_integer() && item.get<long long>() >= 0)) {
      throw ParseError("multi-index entries must be non-negative integers");
    }
    parts.push_back(item.get<unsigned>());
  });
  return MultiIndex(std::move(parts));
}

Json to_json(const Vector<double>& v) { return Json(v); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    out.push_back(x.str());
  }
  return out;
}

Json to_json(const Matrix<double>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j).str());
    }
    out.push_back(std::move(row));
  }
  return out;
}

BigRational rational_from_json(const Json& j) {
  if (j.is_string()) {
    return BigRational::parse(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return BigRational(j.get<long long>());
  }
  if (j.is_number_float()) {
    return BigRational::from_double(j.get<double>());
  }
  throw ParseError("expected a number or a \"p/q\" string");
}

Vector<double> vector_from_json(const Json& j) {
  Vector<double> out;
  require_array(j, "vector", [&](const Json& item) {
    if (item.is_number()) {
      out.push_back(item.get<double>());
    } else if (item.is_string()) {
      out.push_back(BigRational::parse(item.get<std::string>()).to_double());
    } else {
      throw ParseError("vector entries must be numbers");
    }
  });
  return out;
}

RationalVector rational_vector_from_json(const Json& j) {
  RationalVector out;
  require_array(j, "vector", [&](const Json& item) { out.push_back(rational_from_json(item)); });
  return out;
}

namespace {

template <typename T, typename Read>
Matrix<T> read_matrix(const Json& j, Read&& read) {
  std::vector<std::vector<T>> rows;
  require_array(j, "matrix", [&](const Json& row) {
    std::vector<T> values;
    require_array(row, "matrix row", [&](const Json& item) { values.push_back(read(item)); });
    rows.push_back(std::move(values));
  });
  Matrix<T> out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols()) {
      throw DimensionError("matrix rows have different lengths");
    }
    for (std::size_t c = 0; c < out.cols(); ++c) {
      out(i, c) = rows[i][c];
    }
  }
  return out;
}

}  // namespace

Matrix<double> matrix_from_json(const Json& j) {
  return read_matrix<double>(j, [](const Json& item) {
    if (item.is_number()) {
      return item.get<double>();
    }
    if (item.is_string()) {
      return BigRational::parse(item.get<std::string>()).to_double();
    }
    throw ParseError("matrix entries must be numbers");
  });
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  return read_matrix<BigRational>(j, [](const Json& item) { return rational_from_json(item); });
}

Json to_json(const MPoly& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    out.push_back(Json{{"mono", to_json(mono)}, {"coeff", c.str()}});
  }
  return out;
}

MPoly mpoly_from_json(const Json& j, std::size_t arity) {
  if (!j.is_array()) {
    throw ParseError("polynomial must be a JSON array of terms");
  }
  MPoly out(arity);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("mono") || !term.contains("coeff")) {
      throw ParseError("polynomial terms need \"mono\" and \"coeff\"");
    }
    const MultiIndex mono = multiindex_from_json(term.at("mono"));
    if (mono.arity() != arity) {
      throw DimensionError("polynomial monomial arity mismatch");
    }
    out += MPoly::monomial(mono, rational_from_json(term.at("coeff")));
  }
  return out;
}

}  // namespace hermult
