#include "braidmon/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace braidmon {

using nlohmann::json;

SupportSet support_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("support: expected an array");
  SupportSet s;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() < 2)
      throw std::invalid_argument("support: points need >= 2 coordinates");
    std::vector<long long> p;
    for (const auto& v : row) p.push_back(v.get<long long>());
    s.points.push_back(p);
  }
  s.validate();
  return s;
}

std::string support_to_json(const SupportSet& s) {
  json j = json::array();
  for (const auto& p : s.points) j.push_back(p);
  return j.dump();
}

SupportSet load_support(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return support_from_json(ss.str());
}

std::vector<std::string> word_to_json_list(const AnnularBraidWord& w) {
  std::vector<std::string> out;
  const auto& ls = w.letters();
  size_t i = 0;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long e = (long long)(j - i) * ls[i].sign;
    std::string item = ls[i].gen == 0 ? "t" : "b" + std::to_string(ls[i].gen);
    if (e != 1) item += "^" + std::to_string(e);
    out.push_back(item);
    i = j;
  }
  return out;
}

AnnularBraidWord word_from_json_list(const std::vector<std::string>& items,
                                     int strands) {
  AnnularBraidWord w(strands);
  for (const auto& item : items) {
    size_t caret = item.find('^');
    std::string head = item.substr(0, caret);
    long long e = 1;
    if (caret != std::string::npos) e = std::stoll(item.substr(caret + 1));
    int gen;
    if (head == "t") gen = 0;
    else if (head.size() >= 2 && head[0] == 'b') gen = std::stoi(head.substr(1));
    else throw std::invalid_argument("bad braid letter: " + item);
    int sign = e >= 0 ? 1 : -1;
    for (long long k = 0; k < (e >= 0 ? e : -e); ++k) w.push({gen, sign});
  }
  return w;
}

} // namespace braidmon
