// Copyright 2026 The isingqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isingqa/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "isingqa/errors.hpp"

namespace isingqa {

namespace {

double parse_double(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument("line " + std::to_string(line) + ": bad number '" +
                          std::string(tok) + "'");
  }
  return v;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument("line " + std::to_string(line) + ": bad vertex index '" +
                          std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t p = 0;
  while (p < s.size()) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t' || s[p] == '\r')) ++p;
    std::size_t q = p;
    while (q < s.size() && s[q] != ' ' && s[q] != '\t' && s[q] != '\r') ++q;
    if (q > p) out.push_back(s.substr(p, q - p));
    p = q;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string to_text(const IsingInstance& inst) {
  std::string out = "# isingqa instance\n";
  if (!inst.id().empty()) out += "id " + inst.id() + "\n";
  out += "b " + std::to_string(inst.size()) + "\n";
  if (inst.has_fields()) {
    out += "h";
    for (double h : inst.fields()) out += " " + format_double(h);
    out += "\n";
  }
  for (const auto& e : inst.edges()) {
    out += "e " + std::to_string(e.i) + " " + std::to_string(e.j) + " " + format_double(e.J) +
           "\n";
  }
  return out;
}

IsingInstance parse_text(std::string_view text) {
  std::string id;
  std::optional<std::size_t> b;
  std::vector<double> h;
  std::unordered_map<std::string, std::size_t> labels;
  struct RawEdge {
    std::string_view a, c;
    double J;
    std::size_t line;
  };
  std::vector<RawEdge> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = split(line);
    if (tok.empty()) continue;
    const auto key = tok[0];
    if (key == "id") {
      if (tok.size() != 2) throw InvalidArgument("line " + std::to_string(line_no) + ": id takes one token");
      id = std::string(tok[1]);
    } else if (key == "b") {
      if (tok.size() != 2) throw InvalidArgument("line " + std::to_string(line_no) + ": b takes one value");
      b = parse_index(tok[1], line_no);
    } else if (key == "h") {
      for (std::size_t k = 1; k < tok.size(); ++k) h.push_back(parse_double(tok[k], line_no));
    } else if (key == "labels") {
      for (std::size_t k = 1; k < tok.size(); ++k) {
        if (!labels.emplace(std::string(tok[k]), k - 1).second) {
          throw InvalidArgument("line " + std::to_string(line_no) + ": duplicate label");
        }
      }
    } else if (key == "e") {
      if (tok.size() != 4) throw InvalidArgument("line " + std::to_string(line_no) + ": edge needs i j J");
      raw.push_back({tok[1], tok[2], parse_double(tok[3], line_no), line_no});
    } else {
      throw InvalidArgument("line " + std::to_string(line_no) + ": unknown record '" +
                            std::string(key) + "'");
    }
  }
  if (!b) {
    if (labels.empty()) throw InvalidArgument("instance has no 'b' header");
    b = labels.size();
  }
  if (!labels.empty() && labels.size() != *b) {
    throw InvalidArgument("labels line lists " + std::to_string(labels.size()) +
                          " vertices, b = " + std::to_string(*b));
  }
  auto vertex = [&](std::string_view tok, std::size_t line) -> std::size_t {
    if (labels.empty()) return parse_index(tok, line);
    auto it = labels.find(std::string(tok));
    if (it == labels.end()) {
      throw InvalidArgument("line " + std::to_string(line) + ": unknown label '" +
                            std::string(tok) + "'");
    }
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) edges.push_back({vertex(r.a, r.line), vertex(r.c, r.line), r.J});
  return IsingInstance(*b, std::move(edges), std::move(h), std::move(id));
}

std::string to_json_text(const IsingInstance& inst) {
  nlohmann::ordered_json j;
  j["id"] = inst.id();
  j["b"] = inst.size();
  j["h"] = inst.fields();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : inst.edges()) edges.push_back({e.i, e.j, e.J});
  j["edges"] = std::move(edges);
  return j.dump(1) + "\n";
}

IsingInstance parse_json_text(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto b = j.at("b").get<std::size_t>();
    std::vector<double> h;
    if (j.contains("h")) h = j.at("h").get<std::vector<double>>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<double>()});
    }
    return IsingInstance(b, std::move(edges), std::move(h), j.value("id", std::string{}));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed instance JSON: ") + ex.what());
  }
}

IsingInstance load_instance(const std::filesystem::path& path) {
  const auto text = read_file(path);
  if (path.extension() == ".json") return parse_json_text(text);
  return parse_text(text);
}

void save_instance(const IsingInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << (path.extension() == ".json" ? to_json_text(inst) : to_text(inst));
}

}  // namespace isingqa
