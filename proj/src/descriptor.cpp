// Copyright 2026 The fqg Authors
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

#include "fqg/descriptor.hpp"

#include <fstream>
#include <sstream>

#include "fqg/error.hpp"

namespace fqg {

namespace {

CycNum scalar(const Json& v, const std::string& where) {
  if (v.is_string()) return CycNum::parse(v.get<std::string>());
  if (v.is_number_integer()) return CycNum(v.get<long>());
  fail(ErrorCode::kParse, where + ": scalar must be a literal string");
}

std::size_t index_value(const Json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    fail(ErrorCode::kParse, where + ": index must be a non-negative integer");
  }
  const auto i = v.get<std::uint64_t>();
  if (i >= dim) fail(ErrorCode::kDimension, where + ": index " + std::to_string(i) + " out of range");
  return static_cast<std::size_t>(i);
}

std::size_t key_index(const std::string& key, std::size_t dim, const std::string& where) {
  if (key.empty() || !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); })) {
    fail(ErrorCode::kParse, where + ": key '" + key + "' is not a basis index");
  }
  const unsigned long long i = std::stoull(key);
  if (i >= dim) fail(ErrorCode::kDimension, where + ": basis index " + key + " out of range");
  return static_cast<std::size_t>(i);
}

SigPtr signature_from(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kParse, "descriptor must be a JSON object");
  if (!j.contains("blocks") || !j["blocks"].is_array()) fail(ErrorCode::kParse, "descriptor needs a \"blocks\" array");
  std::vector<int> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_number_integer()) fail(ErrorCode::kParse, "blocks: entries must be integers");
    blocks.push_back(b.get<int>());
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array()) fail(ErrorCode::kParse, "names must be an array");
    for (const auto& n : j["names"]) names.push_back(n.get<std::string>());
  }
  return std::make_shared<const AlgSignature>(blocks, names);
}

Json scalar_json(const CycNum& c) { return c.to_string(); }

Json value_map(const Vec& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[std::to_string(i)] = scalar_json(v[i]);
  }
  return out;
}

}  // namespace

Json hopf_to_json(const HopfData& h) {
  Json j;
  j["name"] = h.name;
  j["blocks"] = h.sig->blocks();
  Json names = Json::array();
  for (std::size_t i = 0; i < h.dim(); ++i) names.push_back(h.sig->name(i));
  j["names"] = names;
  Json delta = Json::object();
  for (std::size_t b = 0; b < h.dim(); ++b) {
    Json terms = Json::array();
    for (const auto& [key, c] : h.delta[b].coeffs()) {
      const auto idx = h.delta[b].unpack(key);
      terms.push_back(Json::array({idx[0], idx[1], scalar_json(c)}));
    }
    delta[std::to_string(b)] = terms;
  }
  j["delta"] = delta;
  j["counit"] = value_map(h.counit);
  Json anti = Json::object();
  for (std::size_t b = 0; b < h.dim(); ++b) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < h.dim(); ++i) {
      if (!h.antipode[b][i].is_zero()) terms.push_back(Json::array({i, scalar_json(h.antipode[b][i])}));
    }
    anti[std::to_string(b)] = terms;
  }
  j["antipode"] = anti;
  j["haar"] = h.haar ? value_map(h.haar->values()) : Json(nullptr);
  return j;
}

HopfData hopf_from_json(const Json& j) {
  SigPtr sig = signature_from(j);
  const std::size_t dim = sig->dim();
  HopfData h = make_hopf_shell(sig, j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                                                 : std::string("descriptor"));
  for (const char* field : {"delta", "counit", "antipode"}) {
    if (!j.contains(field) || !j[field].is_object()) {
      fail(ErrorCode::kParse, std::string("descriptor needs a \"") + field + "\" object");
    }
  }
  for (const auto& [key, terms] : j["delta"].items()) {
    const std::size_t b = key_index(key, dim, "delta");
    if (!terms.is_array()) fail(ErrorCode::kParse, "delta." + key + " must be an array");
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 3) fail(ErrorCode::kParse, "delta." + key + ": entries are [i, j, scalar]");
      h.delta[b].add(index_value(t[0], dim, "delta." + key), index_value(t[1], dim, "delta." + key),
                     scalar(t[2], "delta." + key));
    }
  }
  for (const auto& [key, v] : j["counit"].items()) h.counit[key_index(key, dim, "counit")] = scalar(v, "counit." + key);
  for (const auto& [key, terms] : j["antipode"].items()) {
    const std::size_t b = key_index(key, dim, "antipode");
    if (!terms.is_array()) fail(ErrorCode::kParse, "antipode." + key + " must be an array");
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 2) fail(ErrorCode::kParse, "antipode." + key + ": entries are [j, scalar]");
      h.antipode[b][index_value(t[0], dim, "antipode." + key)] += scalar(t[1], "antipode." + key);
    }
  }
  if (j.contains("haar") && !j["haar"].is_null()) {
    if (!j["haar"].is_object()) fail(ErrorCode::kParse, "haar must be an object or null");
    Functional f(sig);
    for (const auto& [key, v] : j["haar"].items()) f.values()[key_index(key, dim, "haar")] = scalar(v, "haar." + key);
    h.haar = f;
  }
  return h;
}

LoadedDescriptor load_descriptor(const Json& j) {
  LoadedDescriptor out{hopf_from_json(j), {}};
  out.axioms = verify_hopf(out.hopf);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorCode::kIo, "error while reading '" + path + "'");
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, "'" + path + "' is not valid JSON: " + e.what());
  }
}

Json tensor_to_json(const TensorElem& t) {
  Json j;
  j["blocks"] = t.signature()->blocks();
  Json terms = Json::array();
  for (const auto& [key, c] : t.coeffs()) {
    const auto idx = t.unpack(key);
    if (t.arity() == 2) {
      terms.push_back(Json::array({idx[0], idx[1], scalar_json(c)}));
    } else {
      terms.push_back(Json::array({idx[0], idx[1], idx[2], scalar_json(c)}));
    }
  }
  j["terms"] = terms;
  return j;
}

TensorElem tensor_from_json(const Json& j, const SigPtr& sig) {
  SigPtr s = signature_from(j);
  if (sig) {
    if (!s->same_shape(*sig)) fail(ErrorCode::kDimension, "tensor blocks do not match the algebra");
    s = sig;
  }
  if (!j.contains("terms") || !j["terms"].is_array()) fail(ErrorCode::kParse, "tensor needs a \"terms\" array");
  TensorElem t(s, 2);
  for (const auto& e : j["terms"]) {
    if (!e.is_array() || e.size() != 3) fail(ErrorCode::kParse, "tensor terms are [i, j, scalar]");
    t.add(index_value(e[0], s->dim(), "terms"), index_value(e[1], s->dim(), "terms"), scalar(e[2], "terms"));
  }
  return t;
}

Json functional_to_json(const Functional& f) { return value_map(f.values()); }

Json element_to_json(const AlgElement& x) { return value_map(x.coords()); }

}  // namespace fqg
