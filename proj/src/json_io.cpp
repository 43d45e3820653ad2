#include <mink/json_io.hpp>

#include <mink/rational.hpp>

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mink {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& problem) {
  throw std::invalid_argument(field + ": " + problem);
}

// Big integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; readers accept both forms.
json big_int_to_json(const BigInt& v) {
  static const BigInt lo(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) {
    return json(static_cast<std::int64_t>(v));
  }
  return json(v.str());
}

BigInt big_int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    try {
      BigInt v(text);
      return v;
    } catch (const std::exception&) {
      fail(field, "not a valid integer string: \"" + text + "\"");
    }
  }
  fail(field, "expected an integer");
}

int small_int_from_json(const json& j, const std::string& field, int lo, int hi) {
  if (!j.is_number_integer()) {
    fail(field, "expected an integer");
  }
  const std::int64_t v = j.get<std::int64_t>();
  if (v < lo || v > hi) {
    std::ostringstream msg;
    msg << "value " << v << " outside allowed range [" << lo << ", " << hi << "]";
    fail(field, msg.str());
  }
  return static_cast<int>(v);
}

const json& require_array(const json& j, const std::string& field) {
  if (!j.is_array()) {
    fail(field, "expected an array");
  }
  return j;
}

const json& require_field(const json& j, const std::string& object_name, const std::string& key) {
  if (!j.is_object()) {
    fail(object_name, "expected a JSON object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    fail(object_name, "missing field \"" + key + "\"");
  }
  return *it;
}

std::pair<int, int> edge_from_json(const json& j, int n, const std::string& field) {
  require_array(j, field);
  if (j.size() != 2) {
    fail(field, "expected exactly two vertex entries");
  }
  const int a = small_int_from_json(j[0], field + "[0]", 1, n);
  const int b = small_int_from_json(j[1], field + "[1]", 1, n);
  if (a == b) {
    fail(field, "edge endpoints must differ");
  }
  return {a, b};
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(what + ": invalid JSON: " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument(path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LatticePolytope polytope_from_json(const json& j) {
  const json& dim_field = require_field(j, "polytope", "ambient_dim");
  const int dim = small_int_from_json(dim_field, "ambient_dim", 1, 1 << 20);

  const json& gens = require_array(require_field(j, "polytope", "generators"), "generators");
  if (gens.empty()) {
    fail("generators", "expected at least one generator");
  }
  std::vector<LatticePoint> points;
  points.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string field = "generators[" + std::to_string(i) + "]";
    const json& row = require_array(gens[i], field);
    if (static_cast<int>(row.size()) != dim) {
      std::ostringstream msg;
      msg << "expected " << dim << " coordinates, got " << row.size();
      fail(field, msg.str());
    }
    LatticePoint point(dim);
    for (int c = 0; c < dim; ++c) {
      point[c] = big_int_from_json(row[c], field + "[" + std::to_string(c) + "]");
    }
    points.push_back(std::move(point));
  }
  return LatticePolytope(dim, std::move(points));
}

json polytope_to_json(const LatticePolytope& p) {
  json gens = json::array();
  for (const LatticePoint& g : p.generators) {
    json row = json::array();
    for (const BigInt& v : g) {
      row.push_back(big_int_to_json(v));
    }
    gens.push_back(std::move(row));
  }
  return json{{"ambient_dim", p.ambient_dim}, {"generators", std::move(gens)}};
}

Graph graph_from_json(const json& j) {
  const json& n_field = require_field(j, "graph", "n");
  const int n = small_int_from_json(n_field, "n", 1, 1 << 20);

  const json& edges = require_array(require_field(j, "graph", "edges"), "edges");
  std::vector<std::pair<int, int>> list;
  list.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    list.push_back(edge_from_json(edges[i], n, "edges[" + std::to_string(i) + "]"));
  }
  return Graph(n, std::move(list));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) {
    edges.push_back(json::array({a, b}));
  }
  return json{{"n", g.n}, {"edges", std::move(edges)}};
}

EdgeWeighting weighting_from_json(const json& j) {
  EdgeWeighting w;
  w.graph = graph_from_json(require_field(j, "weighting", "graph"));

  const json& weights = require_array(require_field(j, "weighting", "weights"), "weights");
  w.weights.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const std::string field = "weights[" + std::to_string(i) + "]";
    const json& entry = require_array(weights[i], field);
    if (entry.size() != 2) {
      fail(field, "expected [[i, j], \"p/q\"]");
    }
    const std::pair<int, int> edge = edge_from_json(entry[0], w.graph.n, field + "[0]");

    const json& value = entry[1];
    BigRational r;
    if (value.is_number_integer()) {
      r = BigRational(BigInt(value.get<std::int64_t>()));
    } else if (value.is_string()) {
      try {
        r = rational_from_string(value.get<std::string>());
      } catch (const std::exception& e) {
        fail(field + "[1]", e.what());
      }
    } else {
      fail(field + "[1]", "expected a rational string \"p/q\" or an integer");
    }
    w.weights.emplace_back(edge, std::move(r));
  }
  return w;
}

json weighting_to_json(const EdgeWeighting& w) {
  json weights = json::array();
  for (const auto& [edge, value] : w.weights) {
    weights.push_back(
        json::array({json::array({edge.first, edge.second}), rational_to_string(value)}));
  }
  return json{{"graph", graph_to_json(w.graph)}, {"weights", std::move(weights)}};
}

json report_to_json(const CheckReport& report) {
  json out{{"property", report.property},
           {"verified_up_to_k", report.verified_up_to_k},
           {"verdict", report.verdict}};
  if (report.counterexample.has_value()) {
    out["counterexample"] =
        json{{"k", report.counterexample->k}, {"alpha", point_to_json(report.counterexample->alpha)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json point_to_json(const LatticePoint& x) {
  json row = json::array();
  for (const BigInt& v : x) {
    row.push_back(big_int_to_json(v));
  }
  return row;
}

json points_to_json(const std::vector<LatticePoint>& points) {
  json out = json::array();
  for (const LatticePoint& x : points) {
    out.push_back(point_to_json(x));
  }
  return out;
}

}  // namespace mink
