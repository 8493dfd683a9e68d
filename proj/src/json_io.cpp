#include "augsimp/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "augsimp/errors.hpp"
#include "json.hpp"

namespace augsimp {

using ojson = nlohmann::ordered_json;

namespace {

ojson parse(std::string_view text) {
  try {
    return ojson::parse(text);
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void expect_kind(const ojson& j, const char* kind) {
  if (!j.is_object() || !j.contains("kind") || j["kind"] != kind)
    throw ParseError(std::string("expected an object with \"kind\":\"") + kind + "\"");
}

int as_int(const ojson& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<int>();
}

}  // namespace

std::string augsset_to_json(const AugSSet& x) {
  ojson j;
  j["kind"] = "augsset";
  auto d = x.dim();
  j["dim"] = d ? ojson(*d) : ojson(nullptr);
  ojson levels = ojson::array();
  for (int n = -1; n <= x.top(); ++n) {
    ojson level;
    level["n"] = n;
    level["size"] = x.size(n);
    if (n >= 0) {
      ojson faces = ojson::array();
      for (int i = 0; i <= n; ++i) {
        auto f = x.face_map(n, i);
        faces.push_back(std::vector<int>(f.begin(), f.end()));
      }
      level["faces"] = std::move(faces);
    }
    levels.push_back(std::move(level));
  }
  j["levels"] = std::move(levels);
  return j.dump();
}

AugSSet augsset_from_json(std::string_view text) {
  ojson j = parse(text);
  expect_kind(j, "augsset");
  if (!j.contains("levels") || !j["levels"].is_array()) throw ParseError("\"levels\" must be an array");
  std::vector<LevelData> levels;
  for (const auto& l : j["levels"]) {
    const int n = static_cast<int>(levels.size()) - 1;
    if (!l.is_object() || !l.contains("n") || as_int(l["n"], "level n") != n)
      throw ParseError("levels must be listed in order starting at n = -1");
    LevelData data;
    if (!l.contains("size")) throw ParseError("level " + std::to_string(n) + " has no size");
    data.size = as_int(l["size"], "size");
    if (data.size < 0) throw ParseError("negative size at level " + std::to_string(n));
    if (n >= 0) {
      if (!l.contains("faces") || !l["faces"].is_array()) throw ParseError("level " + std::to_string(n) + " has no faces");
      for (const auto& f : l["faces"]) {
        if (!f.is_array()) throw ParseError("face maps must be arrays");
        std::vector<int> map;
        for (const auto& t : f) map.push_back(as_int(t, "face target"));
        data.faces.push_back(std::move(map));
      }
    } else if (l.contains("faces")) {
      throw ParseError("level -1 has no faces");
    }
    levels.push_back(std::move(data));
  }
  AugSSet x;
  try {
    x = AugSSet(std::move(levels));
  } catch (const InvalidComplex& e) {
    throw ParseError(e.what());
  }
  if (j.contains("dim")) {
    auto d = x.dim();
    const auto& jd = j["dim"];
    const bool matches = jd.is_null() ? !d.has_value() : (jd.is_number_integer() && d && jd.get<int>() == *d);
    if (!matches) throw ParseError("\"dim\" disagrees with the level sizes");
  }
  return x;
}

std::string sequence_to_json(const AugSequence& a) {
  ojson j;
  j["kind"] = "seq";
  j["start"] = -1;
  ojson entries = ojson::array();
  for (const auto& v : a.entries()) entries.push_back(to_string(v));
  j["entries"] = std::move(entries);
  j["tail"] = "zero";
  return j.dump();
}

AugSequence sequence_from_json(std::string_view text) {
  ojson j = parse(text);
  expect_kind(j, "seq");
  if (j.contains("start") && as_int(j["start"], "start") != -1) throw ParseError("sequences start at index -1");
  if (j.contains("tail") && j["tail"] != "zero") throw ParseError("only \"tail\":\"zero\" can be read");
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("\"entries\" must be an array");
  std::vector<Scalar> v;
  for (const auto& e : j["entries"]) {
    if (e.is_string()) {
      v.push_back(parse_scalar(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      v.emplace_back(e.get<long>());
    } else {
      throw ParseError("sequence entries must be decimal strings");
    }
  }
  return AugSequence(std::move(v));
}

std::string window_to_json(const kernels::MatrixWindow& w) {
  ojson j;
  j["kind"] = "matwin";
  j["name"] = w.name;
  j["rows"] = {w.rows.lo, w.rows.hi};
  j["cols"] = {w.cols.lo, w.cols.hi};
  ojson data = ojson::array();
  for (int i = w.rows.lo; i <= w.rows.hi; ++i) {
    ojson row = ojson::array();
    for (int k = w.cols.lo; k <= w.cols.hi; ++k) row.push_back(to_string(w.at(i, k)));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j.dump();
}

std::string window_to_text(const kernels::MatrixWindow& w) {
  std::size_t label_width = w.name.size();
  for (int i = w.rows.lo; i <= w.rows.hi; ++i) label_width = std::max(label_width, std::to_string(i).size());
  std::vector<std::size_t> widths;
  for (int k = w.cols.lo; k <= w.cols.hi; ++k) {
    std::size_t width = std::to_string(k).size();
    for (int i = w.rows.lo; i <= w.rows.hi; ++i) width = std::max(width, to_string(w.at(i, k)).size());
    widths.push_back(width);
  }
  auto pad = [](const std::string& s, std::size_t width) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  std::ostringstream out;
  out << pad(w.name, label_width) << " |";
  for (int k = w.cols.lo; k <= w.cols.hi; ++k) out << ' ' << pad(std::to_string(k), widths[k - w.cols.lo]);
  out << '\n' << std::string(label_width + 1, '-') << '+';
  for (auto width : widths) out << std::string(width + 1, '-');
  out << '\n';
  for (int i = w.rows.lo; i <= w.rows.hi; ++i) {
    out << pad(std::to_string(i), label_width) << " |";
    for (int k = w.cols.lo; k <= w.cols.hi; ++k) out << ' ' << pad(to_string(w.at(i, k)), widths[k - w.cols.lo]);
    out << '\n';
  }
  return out.str();
}

SubcomplexSpec subcomplex_spec_from_json(std::string_view text) {
  ojson j = parse(text);
  expect_kind(j, "subcomplex");
  SubcomplexSpec spec;
  if (!j.contains("n")) throw ParseError("subcomplex needs \"n\"");
  spec.n = as_int(j["n"], "n");
  if (spec.n < -1) throw ParseError("n must be at least -1");
  if (!j.contains("generators") || !j["generators"].is_array()) throw ParseError("\"generators\" must be an array");
  for (const auto& g : j["generators"]) {
    if (!g.is_array()) throw ParseError("each generator is an array of vertices");
    std::vector<int> verts;
    for (const auto& v : g) verts.push_back(as_int(v, "vertex"));
    spec.generators.push_back(std::move(verts));
  }
  return spec;
}

}  // namespace augsimp
