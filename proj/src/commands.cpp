#include "abel/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "json.hpp"

#include "abel/omega_poset.hpp"

namespace abel::cli {

namespace {

using nlohmann::json;

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

EnumOptions enum_options(const Options& opts) {
  EnumOptions eo;
  eo.max_rank = opts.max_rank;
  return eo;
}

void emit_record(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

std::string root_line(const RootSystem& rs, int index, bool is_theta) {
  const Root& root = rs.positive_roots()[static_cast<size_t>(index)];
  std::string line = root.shorthand() + "  ht=" + std::to_string(root.height());
  if (rs.has_epsilon_view()) {
    line += "  " + rs.epsilon_of(index).to_string();
  }
  if (is_theta) line += "  [theta]";
  return line;
}

void write_root_rows(const RootSystem& rs, const std::vector<int>& indices,
                     Format format, std::ostream& out) {
  const std::string type = rs.type().to_string();
  if (format == Format::Csv) {
    out << "type,index,height,coeffs,epsilon,theta\n";
  }
  int row = 0;
  for (int index : indices) {
    ++row;
    const Root& root = rs.positive_roots()[static_cast<size_t>(index)];
    const bool is_theta = index == rs.highest_root_index();
    const std::string eps =
        rs.has_epsilon_view() ? rs.epsilon_of(index).to_string() : "";
    switch (format) {
      case Format::Text:
        out << root_line(rs, index, is_theta) << "\n";
        break;
      case Format::Csv:
        out << type << ',' << row << ',' << root.height() << ','
            << root.shorthand() << ',' << eps << ','
            << (is_theta ? "true" : "false") << "\n";
        break;
      case Format::Records:
        emit_record(out, json{{"type", type},
                              {"index", row},
                              {"height", root.height()},
                              {"coeffs", root.shorthand()},
                              {"epsilon", eps},
                              {"theta", is_theta}});
        break;
    }
  }
}

// Runs `body` against either stdout or --out.
int with_output(const Options& opts, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
  if (!opts.out_path) return body(out);
  std::ofstream file(*opts.out_path);
  if (!file) {
    throw IoError("cannot open \"" + *opts.out_path + "\" for writing");
  }
  const int rc = body(file);
  file.flush();
  if (!file) {
    throw IoError("failed writing \"" + *opts.out_path + "\"");
  }
  (void)err;
  return rc;
}

std::vector<std::string> shorthands(const std::vector<Root>& roots) {
  std::vector<std::string> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(r.shorthand());
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ' ';
    s += parts[i];
  }
  return s;
}

void write_distribution(const LieType& type, const DimensionDistribution& dist,
                        Format format, std::ostream& out) {
  switch (format) {
    case Format::Text:
      for (size_t i = 0; i < dist.counts.size(); ++i) {
        out << i << ": " << dist.counts[i] << "\n";
      }
      out << "total: " << dist.total() << "\n";
      break;
    case Format::Csv:
      out << "type,dimension,count\n";
      for (size_t i = 0; i < dist.counts.size(); ++i) {
        out << type.to_string() << ',' << i << ',' << dist.counts[i] << "\n";
      }
      out << type.to_string() << ",total," << dist.total() << "\n";
      break;
    case Format::Records:
      for (size_t i = 0; i < dist.counts.size(); ++i) {
        emit_record(out, json{{"type", type.to_string()},
                              {"dimension", i},
                              {"count", dist.counts[i]}});
      }
      break;
  }
}

} // namespace

int cmd_roots(const std::string& type_str, const Options& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RootSystem rs = build_root_system(LieType::parse(type_str));
    return with_output(opts, out, err, [&](std::ostream& o) {
      std::vector<int> all(rs.positive_roots().size());
      for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
      write_root_rows(rs, all, opts.format, o);
      return 0;
    });
  });
}

int cmd_omega(const std::string& type_str, const Options& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RootSystem rs = build_root_system(LieType::parse(type_str));
    const OmegaPoset omega = compute_omega(rs);
    return with_output(opts, out, err, [&](std::ostream& o) {
      write_root_rows(rs, omega.root_indices, opts.format, o);
      if (opts.format == Format::Text) {
        o << "nodes: " << omega.size() << "\n";
      }
      return 0;
    });
  });
}

int cmd_hasse(const std::string& type_str, const Options& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RootSystem rs = build_root_system(LieType::parse(type_str));
    const OmegaPoset omega = compute_omega(rs);
    const std::string dot = hasse_to_dot(omega);
    const std::string counts = "nodes: " + std::to_string(omega.size()) +
                               "\nedges: " +
                               std::to_string(omega.covers.size()) + "\n";
    if (opts.out_path) {
      std::ofstream file(*opts.out_path);
      if (!file) {
        throw IoError("cannot open \"" + *opts.out_path + "\" for writing");
      }
      file << dot;
      file.flush();
      if (!file) throw IoError("failed writing \"" + *opts.out_path + "\"");
      out << counts;
    } else {
      out << dot;
      err << counts;
    }
    return 0;
  });
}

int cmd_ideals(const std::string& type_str, const std::string& mode,
               const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (mode != "list" && mode != "min-gens" && mode != "dist") {
      throw UsageError("unknown ideals mode \"" + mode +
                       "\" (expected list, min-gens or dist)");
    }
    const LieType type = LieType::parse(type_str);
    const RootSystem rs = build_root_system(type);
    return with_output(opts, out, err, [&](std::ostream& o) {
      if (mode == "dist") {
        write_distribution(type, dimension_distribution(rs, enum_options(opts)),
                           opts.format, o);
        return 0;
      }
      const auto ideals = enumerate_ideals(rs, enum_options(opts));
      const bool generators = mode == "min-gens";
      if (opts.format == Format::Csv) {
        o << (generators ? "type,dimension,generators\n"
                         : "type,dimension,roots\n");
      }
      for (const AbelianIdeal& ideal : ideals) {
        const std::vector<std::string> names = shorthands(
            generators ? minimal_roots(rs, ideal).roots : ideal.roots);
        switch (opts.format) {
          case Format::Text:
            o << "dim=" << ideal.dimension()
              << (generators ? " min:" : " roots:");
            for (const auto& n : names) o << ' ' << n;
            o << "\n";
            break;
          case Format::Csv:
            o << type.to_string() << ',' << ideal.dimension() << ','
              << join(names) << "\n";
            break;
          case Format::Records:
            emit_record(o, json{{"type", type.to_string()},
                                {"dimension", ideal.dimension()},
                                {generators ? "generators" : "roots", names}});
            break;
        }
      }
      return 0;
    });
  });
}

int cmd_genfun(const std::string& type_str, const Options& opts,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LieType type = LieType::parse(type_str);
    const DimensionDistribution dist = closed_form_distribution(type);
    const long long at_one = to_polynomial(dist).eval(1);
    return with_output(opts, out, err, [&](std::ostream& o) {
      switch (opts.format) {
        case Format::Text:
          for (size_t i = 0; i < dist.counts.size(); ++i) {
            if (i > 0) o << ' ';
            o << dist.counts[i];
          }
          o << "\n" << "t=1: " << at_one << "\n";
          break;
        case Format::Csv:
          o << "type,degree,coefficient\n";
          for (size_t i = 0; i < dist.counts.size(); ++i) {
            o << type.to_string() << ',' << i << ',' << dist.counts[i] << "\n";
          }
          o << type.to_string() << ",t=1," << at_one << "\n";
          break;
        case Format::Records:
          for (size_t i = 0; i < dist.counts.size(); ++i) {
            emit_record(o, json{{"type", type.to_string()},
                                {"degree", i},
                                {"coefficient", dist.counts[i]}});
          }
          emit_record(o, json{{"type", type.to_string()}, {"eval_at_1", at_one}});
          break;
      }
      return 0;
    });
  });
}

int print_verification(const VerificationReport& report, Format format,
                       std::ostream& out, bool csv_header) {
  int failures = 0;
  const std::string type = report.type.to_string();
  if (format == Format::Csv && csv_header) out << "type,check,status\n";
  for (const CheckResult& check : report.checks) {
    if (!check.pass) ++failures;
    const std::string status = check.pass ? "pass" : "fail";
    switch (format) {
      case Format::Text:
        out << type << ' ' << check.name << ": "
            << (check.pass ? "pass" : "FAIL");
        if (!check.detail.empty()) out << " (" << check.detail << ")";
        out << "\n";
        break;
      case Format::Csv:
        out << type << ',' << check.name << ',' << status << "\n";
        break;
      case Format::Records:
        emit_record(out, json{{"type", type},
                              {"check", check.name},
                              {"status", status}});
        break;
    }
  }
  return failures == 0 ? 0 : 1;
}

int cmd_verify(const std::string& selector, const Options& opts,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<LieType> targets;
    if (selector == "all") {
      // Bound the sweep: --max-rank when given, else a small default.
      const int sweep = opts.max_rank_given ? opts.max_rank : 8;
      if (sweep < 1) throw UsageError("--max-rank must be >= 1");
      for (int r = 1; r <= sweep; ++r) targets.push_back(LieType::make(Family::A, r));
      for (int r = 2; r <= sweep; ++r) targets.push_back(LieType::make(Family::B, r));
      for (int r = 2; r <= sweep; ++r) targets.push_back(LieType::make(Family::C, r));
      for (int r = 3; r <= sweep; ++r) targets.push_back(LieType::make(Family::D, r));
      if (sweep >= 2) targets.push_back(LieType::make(Family::G, 2));
      if (sweep >= 4) targets.push_back(LieType::make(Family::F, 4));
      for (int r = 6; r <= 8; ++r) {
        if (sweep >= r) targets.push_back(LieType::make(Family::E, r));
      }
    } else {
      targets.push_back(LieType::parse(selector));
    }
    return with_output(opts, out, err, [&](std::ostream& o) {
      int total_checks = 0;
      int failures = 0;
      bool first = true;
      for (const LieType& type : targets) {
        const VerificationReport report = verify_type(type, enum_options(opts));
        total_checks += static_cast<int>(report.checks.size());
        for (const CheckResult& c : report.checks) {
          if (!c.pass) ++failures;
        }
        print_verification(report, opts.format, o, first);
        first = false;
      }
      if (opts.format == Format::Text) {
        o << "result: " << total_checks << " checks, " << failures
          << " failures\n";
      }
      return failures == 0 ? 0 : 1;
    });
  });
}

} // namespace abel::cli
