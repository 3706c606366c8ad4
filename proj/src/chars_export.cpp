#include "exactgrp/chars.hpp"

#include <json.hpp>

#include <sstream>

namespace exactgrp {

std::vector<ClassMeta> class_metadata(CharTable const &t, FinMatGroup const *fm,
                                      std::vector<std::string> const &gen_names) {
  std::vector<ClassMeta> out;
  for (auto const &c : t.group.classes.classes) {
    ClassMeta m;
    m.elem_order = c.elem_order;
    m.size = c.size;
    m.centralizer = c.centralizer;
    if (fm) {
      auto path = fm->word_path(c.rep);
      for (int g : path) {
        if (!m.word.empty())
          m.word += "*";
        m.word += g < static_cast<int>(gen_names.size()) ? gen_names[g] : "g" + std::to_string(g + 1);
      }
      if (m.word.empty())
        m.word = "1";
    }
    out.push_back(m);
  }
  return out;
}

std::string table_json(CharTable const &t, std::vector<ClassMeta> const &meta) {
  nlohmann::ordered_json j;
  j["order"] = t.group.order();
  auto &cls = j["classes"] = nlohmann::ordered_json::array();
  for (auto const &m : meta) {
    nlohmann::ordered_json c;
    c["element_order"] = m.elem_order;
    c["size"] = m.size;
    c["centralizer"] = m.centralizer;
    if (!m.word.empty())
      c["representative"] = m.word;
    cls.push_back(c);
  }
  auto &rows = j["characters"] = nlohmann::ordered_json::array();
  for (size_t k = 0; k < t.irr.size(); ++k) {
    nlohmann::ordered_json r;
    r["label"] = t.labels[k];
    auto &vals = r["values"] = nlohmann::ordered_json::array();
    for (auto const &x : t.irr[k].values)
      vals.push_back(x.pretty());
    rows.push_back(r);
  }
  return j.dump(2);
}

std::string table_text(CharTable const &t, std::vector<ClassMeta> const &meta) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head_order{"order"}, head_size{"size"}, head_cent{"centralizer"};
  for (auto const &m : meta) {
    head_order.push_back(std::to_string(m.elem_order));
    head_size.push_back(std::to_string(m.size));
    head_cent.push_back(std::to_string(m.centralizer));
  }
  cells.push_back(head_cent);
  cells.push_back(head_size);
  cells.push_back(head_order);
  for (size_t k = 0; k < t.irr.size(); ++k) {
    std::vector<std::string> r{t.labels[k]};
    for (auto const &x : t.irr[k].values)
      r.push_back(x.pretty());
    cells.push_back(r);
  }
  std::vector<size_t> width(cells[0].size(), 0);
  for (auto const &r : cells)
    for (size_t c = 0; c < r.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  for (size_t r = 0; r < cells.size(); ++r) {
    for (size_t c = 0; c < cells[r].size(); ++c) {
      std::string const &s = cells[r][c];
      if (c == 0)
        os << s << std::string(width[0] - s.size(), ' ') << " |";
      else
        os << " " << std::string(width[c] - s.size(), ' ') << s;
    }
    os << "\n";
    if (r == 2) {
      size_t line = width[0] + 2;
      for (size_t c = 1; c < width.size(); ++c)
        line += width[c] + 1;
      os << std::string(line, '-') << "\n";
    }
  }
  return os.str();
}

}  // namespace exactgrp
