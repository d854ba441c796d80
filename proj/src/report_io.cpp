#include <frontcalc/report_io.hpp>

#include <sstream>
#include <stdexcept>

namespace frontcalc {

using nlohmann::ordered_json;

Verdict verdict_from_string(std::string_view s) {
  for (Verdict v :
       {Verdict::NonSingular, Verdict::CuspCrossRn, Verdict::SwallowtailCrossRn1,
        Verdict::LegendrianA, Verdict::Sk, Verdict::WhitneyUmbrellaCrossRn1,
        Verdict::UndeterminedAtTruncation, Verdict::NotApplicable}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

PedalRoute route_from_string(std::string_view s) {
  for (PedalRoute r : {PedalRoute::None, PedalRoute::NonZeroValue,
                       PedalRoute::FoldOfP, PedalRoute::Morse}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown route '" + std::string(s) + "'");
}

ordered_json to_json(const ReportDocument& doc) {
  const auto& r = doc.report;
  ordered_json j;
  j["pipeline"] = doc.pipeline;
  j["label"] = r.label();
  j["verdict"] = to_string(r.verdict);
  j["a_index"] = r.a_index;
  j["sk_index"] = r.sk_index;
  j["sk_sign"] = r.sk_sign;
  j["sign_identified"] = r.sign_identified;
  j["route"] = to_string(r.route);
  j["precondition_met"] = r.precondition_met;
  j["oracle_agrees"] =
      r.oracle_agrees ? ordered_json(*r.oracle_agrees) : ordered_json(nullptr);
  ordered_json ev = ordered_json::array();
  for (const auto& e : r.evidence) {
    ordered_json item;
    item["criterion"] = e.criterion;
    ordered_json values = ordered_json::array();
    for (const auto& v : e.values) values.push_back(to_string(v));
    item["values"] = values;
    item["rank"] = e.rank ? ordered_json(*e.rank) : ordered_json(nullptr);
    item["order"] = e.order ? ordered_json(*e.order) : ordered_json(nullptr);
    item["note"] = e.note;
    ev.push_back(item);
  }
  j["evidence"] = ev;
  return j;
}

ReportDocument report_from_json(const ordered_json& j) {
  try {
    ReportDocument doc;
    doc.pipeline = j.at("pipeline").get<std::string>();
    auto& r = doc.report;
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.a_index = j.at("a_index").get<unsigned>();
    r.sk_index = j.at("sk_index").get<unsigned>();
    r.sk_sign = j.at("sk_sign").get<int>();
    r.sign_identified = j.at("sign_identified").get<bool>();
    r.route = route_from_string(j.at("route").get<std::string>());
    r.precondition_met = j.at("precondition_met").get<bool>();
    if (!j.at("oracle_agrees").is_null()) {
      r.oracle_agrees = j.at("oracle_agrees").get<bool>();
    }
    for (const auto& item : j.at("evidence")) {
      Evidence e;
      e.criterion = item.at("criterion").get<std::string>();
      for (const auto& v : item.at("values")) {
        e.values.push_back(parse_rational(v.get<std::string>()));
      }
      if (!item.at("rank").is_null()) e.rank = item.at("rank").get<std::size_t>();
      if (!item.at("order").is_null()) e.order = item.at("order").get<unsigned>();
      e.note = item.at("note").get<std::string>();
      r.evidence.push_back(std::move(e));
    }
    if (j.contains("label") && j.at("label").get<std::string>() != r.label()) {
      throw std::invalid_argument("label does not match verdict fields");
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string emit_report_block(const ReportDocument& doc) {
  std::string out(kReportBegin);
  out += '\n';
  out += to_json(doc).dump(2);
  out += '\n';
  out += kReportEnd;
  out += '\n';
  return out;
}

ReportDocument parse_report_block(std::string_view text) {
  const auto b = text.find(kReportBegin);
  if (b == std::string_view::npos) {
    throw std::invalid_argument("no report block found");
  }
  const auto body = b + kReportBegin.size();
  const auto e = text.find(kReportEnd, body);
  if (e == std::string_view::npos) {
    throw std::invalid_argument("unterminated report block");
  }
  ordered_json j;
  try {
    j = ordered_json::parse(text.substr(body, e - body));
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed report: ") + ex.what());
  }
  return report_from_json(j);
}

std::string human_report(const ReportDocument& doc) {
  const auto& r = doc.report;
  std::ostringstream out;
  out << "pipeline: " << doc.pipeline << '\n';
  out << "verdict: " << r.label() << '\n';
  if (r.route != PedalRoute::None) out << "route: " << to_string(r.route) << '\n';
  if (!r.precondition_met) out << "precondition: not met\n";
  if (r.verdict == Verdict::Sk && r.sign_identified) {
    out << "note: k+1 odd, Sk(" << r.sk_index << ", +) and Sk(" << r.sk_index
        << ", -) are equivalent via y -> -y\n";
  }
  if (r.oracle_agrees) {
    out << "local-algebra oracle: " << (*r.oracle_agrees ? "agrees" : "DISAGREES")
        << '\n';
  }
  out << "evidence:\n";
  for (const auto& e : r.evidence) {
    out << "  " << e.criterion << ':';
    if (!e.values.empty()) {
      out << " [";
      for (std::size_t i = 0; i < e.values.size(); ++i) {
        out << (i ? ", " : "") << to_string(e.values[i]);
      }
      out << ']';
    }
    if (e.rank) out << " rank=" << *e.rank;
    if (e.order) out << " order=" << *e.order;
    if (!e.note.empty()) out << " (" << e.note << ')';
    out << '\n';
  }
  return out.str();
}

}  // namespace frontcalc
