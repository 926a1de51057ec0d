#pragma once

// Report documents shared by the command-line subcommands: a JSON encoding
// with a fixed key order, and aligned plain-text tables.

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclotorsion/torsion.hpp"
#include "json.hpp"

namespace cyclotorsion {

struct PointRecord {
  long n = 1, x = 0, y = 0;
  bool operator==(const PointRecord&) const = default;
};

inline PointRecord to_record(const TorsionPoint& p) { return {p.order(), p.x_exp(), p.y_exp()}; }

inline std::vector<PointRecord> to_records(const std::vector<TorsionPoint>& pts) {
  std::vector<PointRecord> out;
  for (const auto& p : pts) out.push_back(to_record(p));
  return out;
}

struct MemberBoundRecord {
  std::string label;
  long bound = 0;
  std::string note;
  bool operator==(const MemberBoundRecord&) const = default;
};

struct BoundRecord {
  long total = 0;
  bool infinite = false;
  std::vector<MemberBoundRecord> members;
  bool operator==(const BoundRecord&) const = default;
};

struct DistributionRecord {
  std::string label;
  std::vector<PointRecord> points;
  long nontorsion = 0;
  bool operator==(const DistributionRecord&) const = default;
};

struct ReportDocument {
  std::string case_tag;
  long conductor = 1;
  std::optional<BoundRecord> bound;
  std::optional<std::vector<PointRecord>> points;
  std::optional<std::vector<DistributionRecord>> distribution;
  std::vector<std::string> notes;
  bool operator==(const ReportDocument&) const = default;
};

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const PointRecord& p) { return OrderedJson{{"n", p.n}, {"x", p.x}, {"y", p.y}}; }

inline OrderedJson to_json(const std::vector<PointRecord>& pts) {
  OrderedJson a = OrderedJson::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

inline OrderedJson to_json(const ReportDocument& d) {
  OrderedJson j;
  j["case"] = d.case_tag;
  j["conductor"] = d.conductor;
  if (d.bound) {
    OrderedJson members = OrderedJson::array();
    for (const auto& m : d.bound->members) members.push_back({{"label", m.label}, {"bound", m.bound}, {"note", m.note}});
    j["bound"] = {{"total", d.bound->total}, {"infinite", d.bound->infinite}, {"members", members}};
  } else {
    j["bound"] = nullptr;
  }
  j["points"] = d.points ? to_json(*d.points) : OrderedJson(nullptr);
  if (d.distribution) {
    OrderedJson rows = OrderedJson::array();
    for (const auto& r : *d.distribution)
      rows.push_back({{"label", r.label}, {"points", to_json(r.points)}, {"nontorsion", r.nontorsion}});
    j["distribution"] = rows;
  } else {
    j["distribution"] = nullptr;
  }
  j["notes"] = d.notes;
  return j;
}

inline std::vector<PointRecord> points_from_json(const OrderedJson& a) {
  std::vector<PointRecord> out;
  for (const auto& p : a) out.push_back({p.at("n").get<long>(), p.at("x").get<long>(), p.at("y").get<long>()});
  return out;
}

inline ReportDocument report_from_json(const OrderedJson& j) {
  ReportDocument d;
  d.case_tag = j.at("case").get<std::string>();
  d.conductor = j.at("conductor").get<long>();
  if (!j.at("bound").is_null()) {
    BoundRecord b;
    b.total = j["bound"].at("total").get<long>();
    b.infinite = j["bound"].at("infinite").get<bool>();
    for (const auto& m : j["bound"].at("members"))
      b.members.push_back({m.at("label").get<std::string>(), m.at("bound").get<long>(), m.at("note").get<std::string>()});
    d.bound = b;
  }
  if (!j.at("points").is_null()) d.points = points_from_json(j["points"]);
  if (!j.at("distribution").is_null()) {
    std::vector<DistributionRecord> rows;
    for (const auto& r : j["distribution"])
      rows.push_back({r.at("label").get<std::string>(), points_from_json(r.at("points")), r.at("nontorsion").get<long>()});
    d.distribution = rows;
  }
  d.notes = j.at("notes").get<std::vector<std::string>>();
  return d;
}

inline ReportDocument enumeration_report(const EnumerationResult& e) {
  ReportDocument d;
  d.case_tag = to_string(e.case_tag);
  d.conductor = e.conductor;
  d.points = to_records(e.points);
  if (e.witness) d.notes.push_back("infinite: contains " + e.witness->to_string() + " = 0");
  return d;
}

inline BoundRecord bound_record(const BoundReport& b) {
  BoundRecord r{b.total, b.infinite, {}};
  for (const auto& m : b.members) r.members.push_back({m.label, m.bound, m.note});
  return r;
}

inline std::vector<DistributionRecord> distribution_records(const DistributionTable& t) {
  std::vector<DistributionRecord> rows;
  for (const auto& r : t.rows) rows.push_back({r.label, to_records(r.points), r.nontorsion});
  return rows;
}

inline std::string format_point(const PointRecord& p) {
  return "(" + std::to_string(p.n) + ": " + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

/// Plain-text rendering: a header line, then whichever tables are present.
inline std::string render_text(const ReportDocument& d) {
  std::ostringstream out;
  out << "case " << d.case_tag << ", conductor " << d.conductor << "\n";
  if (d.bound) {
    if (d.bound->infinite) {
      out << "bound: infinite\n";
    } else {
      out << "bound: " << d.bound->total << "\n";
      if (!d.bound->members.empty()) {
        out << std::left << std::setw(8) << "member" << std::right << std::setw(6) << "bound" << "  note\n";
        for (const auto& m : d.bound->members)
          out << std::left << std::setw(8) << m.label << std::right << std::setw(6) << m.bound << "  " << m.note << "\n";
      }
    }
  }
  if (d.points) {
    out << d.points->size() << " torsion points\n";
    if (!d.points->empty()) {
      out << std::setw(6) << "n" << std::setw(6) << "x" << std::setw(6) << "y" << "\n";
      for (const auto& p : *d.points) out << std::setw(6) << p.n << std::setw(6) << p.x << std::setw(6) << p.y << "\n";
    }
  }
  if (d.distribution) {
    out << std::left << std::setw(8) << "member" << std::right << std::setw(8) << "torsion" << std::setw(13)
        << "non-torsion" << "  points\n";
    for (const auto& r : *d.distribution) {
      out << std::left << std::setw(8) << r.label << std::right << std::setw(8) << r.points.size() << std::setw(13)
          << r.nontorsion;
      if (!r.points.empty()) out << " ";
      for (const auto& p : r.points) out << " " << format_point(p);
      out << "\n";
    }
  }
  for (const auto& n : d.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace cyclotorsion
