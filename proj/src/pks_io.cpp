#include <cctype>

#include "text_util.hpp"
#include "tpcheck/error.hpp"
#include "tpcheck/pks.hpp"

namespace tpcheck {

namespace {

using detail::Field;
using detail::is_identifier;
using detail::split_fields;

StateId lookup_state(const Pks& m, const Field& f, std::size_t line) {
  auto s = m.find_state(f.text);
  if (!s) throw ParseError(line, f.column, "unknown state '" + f.text + "'");
  return *s;
}

}  // namespace

Pks parse_pks(std::string_view text) {
  Pks m;
  bool have_header = false;
  bool have_ap = false;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_fields(line);
    if (fields.empty()) return;
    const std::string& kw = fields[0].text;
    auto need = [&](std::size_t n) {
      if (fields.size() < n) {
        throw ParseError(line_no, fields.back().column + fields.back().text.size(),
                         "'" + kw + "' needs more arguments");
      }
    };

    if (kw == "pks") {
      if (have_header) throw ParseError(line_no, 1, "duplicate 'pks' header");
      if (fields.size() != 2) throw ParseError(line_no, 1, "expected 'pks <name>'");
      m.set_name(fields[1].text);
      have_header = true;
      return;
    }
    if (!have_header) throw ParseError(line_no, 1, "expected 'pks <name>' header first");

    if (kw == "ap") {
      if (have_ap) throw ParseError(line_no, 1, "duplicate 'ap' line");
      if (m.state_count() > 0) throw ParseError(line_no, 1, "'ap' must precede states");
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto& f = fields[i];
        if (!is_identifier(f.text) || detail::is_ltl_keyword(f.text)) {
          throw ParseError(line_no, f.column, "invalid proposition name '" + f.text + "'");
        }
        if (m.find_prop(f.text)) {
          throw ParseError(line_no, f.column, "duplicate proposition '" + f.text + "'");
        }
        m.add_prop(f.text);
      }
      have_ap = true;
    } else if (kw == "state") {
      if (!have_ap) throw ParseError(line_no, 1, "'ap' must precede states");
      need(2);
      const auto& sf = fields[1];
      if (!is_identifier(sf.text)) {
        throw ParseError(line_no, sf.column, "invalid state name '" + sf.text + "'");
      }
      if (m.find_state(sf.text)) {
        throw ParseError(line_no, sf.column, "duplicate state '" + sf.text + "'");
      }
      const StateId s = m.add_state(sf.text);
      std::vector<bool> seen(m.prop_count(), false);
      for (std::size_t i = 2; i < fields.size(); ++i) {
        const auto& f = fields[i];
        const auto eq = f.text.find('=');
        if (eq == std::string::npos) {
          throw ParseError(line_no, f.column, "expected '<prop>=T|F|?'");
        }
        const std::string prop = f.text.substr(0, eq);
        auto p = m.find_prop(prop);
        if (!p) throw ParseError(line_no, f.column, "unknown proposition '" + prop + "'");
        if (seen[*p]) throw ParseError(line_no, f.column, "duplicate label for '" + prop + "'");
        auto v = tri_from_text(std::string_view(f.text).substr(eq + 1));
        if (!v) throw ParseError(line_no, f.column + eq + 1, "label must be T, F or ?");
        m.set_label(s, *p, *v);
        seen[*p] = true;
      }
      for (PropId p = 0; p < m.prop_count(); ++p) {
        if (!seen[p]) {
          throw ParseError(line_no, sf.column,
                           "state '" + sf.text + "' has no label for '" + m.prop_name(p) + "'");
        }
      }
    } else if (kw == "init") {
      need(2);
      for (std::size_t i = 1; i < fields.size(); ++i) {
        m.add_initial(lookup_state(m, fields[i], line_no));
      }
    } else if (kw == "trans") {
      if (fields.size() != 3) throw ParseError(line_no, 1, "expected 'trans <src> <dst>'");
      m.add_transition(lookup_state(m, fields[1], line_no), lookup_state(m, fields[2], line_no));
    } else {
      throw ParseError(line_no, fields[0].column, "unknown keyword '" + kw + "'");
    }
  });
  if (!have_header) throw ParseError(1, 1, "missing 'pks <name>' header");
  return m;
}

std::string to_text(const Pks& m) {
  std::string out = "pks " + m.name() + "\nap";
  for (const auto& p : m.props()) out += " " + p;
  out += '\n';
  for (StateId s = 0; s < m.state_count(); ++s) {
    out += "state " + m.state_name(s);
    for (PropId p = 0; p < m.prop_count(); ++p) {
      out += ' ';
      out += m.prop_name(p);
      out += '=';
      out += tri_char(m.label(s, p));
    }
    out += '\n';
  }
  if (!m.initial().empty()) {
    out += "init";
    for (StateId s : m.initial()) out += " " + m.state_name(s);
    out += '\n';
  }
  for (StateId s = 0; s < m.state_count(); ++s) {
    for (StateId t : m.successors(s)) {
      out += "trans " + m.state_name(s) + " " + m.state_name(t) + "\n";
    }
  }
  return out;
}

}  // namespace tpcheck
