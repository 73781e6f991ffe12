#include "json_io.hpp"

namespace cyclo {

Json to_json(const Groupoid& g) { return Json{{"n", g.n}}; }

Json to_json(const Arrow& f) { return Json{{"src", f.src}, {"disp", f.disp}}; }

Json to_json(const Loop& x) {
  Json arr = Json::array();
  for (const Arrow& f : x) arr.push_back(to_json(f));
  return arr;
}

Json to_json(const GenWitness& w) {
  auto blocks = [](const std::vector<WitnessBlock>& bs) {
    Json arr = Json::array();
    for (const WitnessBlock& b : bs)
      arr.push_back(Json{{"start", b.start}, {"len", b.len}, {"winding", b.winding}});
    return arr;
  };
  Json j{{"blocks", blocks(w.blocks)}, {"rotation", w.rotation}};
  if (w.ternary) j["second_blocks"] = blocks(w.second_blocks);
  return j;
}

Json to_json(const Morphism& h) {
  return Json{{"src", h.src_n()},
              {"dst", h.dst_m()},
              {"degree", h.degree()},
              {"base", h.base()},
              {"blocks", h.blocks()}};
}

Json to_json(const Diagram& d) {
  Json arrows = Json::array();
  for (const auto& e : d.edges()) {
    if (e.from == e.to && e.label == 1) continue;  // identities are implicit
    arrows.push_back(Json{{"from", e.from}, {"to", e.to}, {"label", e.label}});
  }
  return Json{{"objects", d.objects()}, {"arrows", arrows}};
}

namespace {

int64_t get_int(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key) && j[key].is_number_integer(), Errc::parse_error,
          std::string("missing integer field '") + key + "'");
  return j[key].get<int64_t>();
}

}  // namespace

Arrow arrow_from_json(const Groupoid& g, const Json& j) {
  return make_arrow(g, get_int(j, "src"), get_int(j, "disp"));
}

Morphism morphism_from_json(const Json& j) {
  require(j.is_object() && j.contains("blocks") && j["blocks"].is_array(), Errc::parse_error,
          "missing 'blocks' array");
  std::vector<int64_t> blocks;
  for (const auto& b : j["blocks"]) {
    require(b.is_number_integer(), Errc::parse_error, "non-integer block");
    blocks.push_back(b.get<int64_t>());
  }
  return Morphism(get_int(j, "src"), get_int(j, "dst"), get_int(j, "degree"),
                  get_int(j, "base"), std::move(blocks));
}

Diagram diagram_from_json(const Json& j) {
  require(j.is_object() && j.contains("arrows") && j["arrows"].is_array(), Errc::parse_error,
          "missing 'arrows' array");
  std::vector<Diagram::Edge> edges;
  for (const auto& e : j["arrows"])
    edges.push_back(Diagram::Edge{get_int(e, "from"), get_int(e, "to"), get_int(e, "label")});
  return Diagram(get_int(j, "objects"), std::move(edges));
}

Arrow parse_arrow(const Groupoid& g, const std::string& text) {
  const size_t at = text.find('@');
  require(at != std::string::npos, Errc::parse_error,
          "arrow literal '" + text + "' is not disp@src");
  try {
    size_t used = 0;
    const int64_t disp = std::stoll(text.substr(0, at), &used);
    require(used == at, Errc::parse_error, "bad displacement");
    const std::string src_text = text.substr(at + 1);
    const int64_t src = std::stoll(src_text, &used);
    require(used == src_text.size(), Errc::parse_error, "bad source");
    return make_arrow(g, src, disp);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "cannot parse arrow '" + text + "'");
  }
}

Loop parse_loop(const Groupoid& g, const std::string& text) {
  Loop out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) out.push_back(parse_arrow(g, item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  require(!out.empty(), Errc::parse_error, "empty loop literal");
  return out;
}

}  // namespace cyclo
