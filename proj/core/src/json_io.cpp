#include "steinberg/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw DomainError(message);
  }
}

std::vector<int> int_array(const nlohmann::json& j, const std::string& where) {
  require(j.is_array(), where + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    require(v.is_number_integer(), where + " must contain only integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> row_arrays(const nlohmann::json& j, const std::string& where) {
  require(j.is_array(), where + " must be an array of rows");
  std::vector<std::vector<int>> rows;
  rows.reserve(j.size());
  for (const auto& row : j) {
    rows.push_back(int_array(row, where + " row"));
  }
  return rows;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  require(j.is_object(), std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  require(it != j.end(), std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) {
  p = Partition(int_array(j, "partition"));
}

void to_json(nlohmann::json& j, const Tableau& t) { j = t.rows(); }

void from_json(const nlohmann::json& j, Tableau& t) {
  t = Tableau(row_arrays(j, "tableau"));
}

void to_json(nlohmann::json& j, const SkewTableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < t.outer().num_rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < t.inner().row(r); ++c) {
      row.push_back(nullptr);
    }
    for (int c = t.inner().row(r); c < t.outer().row(r); ++c) {
      row.push_back(t.at(r, c));
    }
    rows.push_back(std::move(row));
  }
  j = nlohmann::json{{"outer", t.outer()}, {"inner", t.inner()}, {"rows", std::move(rows)}};
}

void from_json(const nlohmann::json& j, SkewTableau& t) {
  Partition outer = field(j, "outer").get<Partition>();
  Partition inner = field(j, "inner").get<Partition>();
  const nlohmann::json& raw = field(j, "rows");
  require(raw.is_array(), "\"rows\" must be an array of rows");
  std::vector<std::vector<int>> rows;
  rows.reserve(raw.size());
  int r = 0;
  for (const auto& row : raw) {
    require(row.is_array(), "\"rows\" must contain arrays");
    std::vector<int> entries;
    int position = 0;
    for (const auto& v : row) {
      if (v.is_null()) {
        require(position < inner.row(r) && entries.empty(),
                "null placeholders must fill exactly the inner boxes");
      } else {
        require(v.is_number_integer(), "skew rows must hold integers or nulls");
        entries.push_back(v.get<int>());
      }
      ++position;
    }
    require(static_cast<int>(row.size()) - static_cast<int>(entries.size()) == inner.row(r),
            "null placeholders must fill exactly the inner boxes");
    rows.push_back(std::move(entries));
    ++r;
  }
  t = SkewTableau(std::move(outer), std::move(inner), std::move(rows));
}

void to_json(nlohmann::json& j, const SignedYoungDiagram& d) { j = d.to_strings(); }

void from_json(const nlohmann::json& j, SignedYoungDiagram& d) {
  require(j.is_array(), "signed diagram must be an array of sign strings");
  std::vector<std::string> rows;
  rows.reserve(j.size());
  for (const auto& v : j) {
    require(v.is_string(), "signed diagram must contain strings of '+' and '-'");
    rows.push_back(v.get<std::string>());
  }
  d = SignedYoungDiagram::from_strings(rows);
}

void to_json(nlohmann::json& j, const PartialPermutation& tau) {
  j = nlohmann::json{{"n", tau.n()}, {"word", tau.word()}};
}

void from_json(const nlohmann::json& j, PartialPermutation& tau) {
  const nlohmann::json& n = field(j, "n");
  require(n.is_number_integer(), "\"n\" must be an integer");
  tau = PartialPermutation(n.get<int>(), int_array(field(j, "word"), "\"word\""));
}

void to_json(nlohmann::json& j, const ImageClassEntry& entry) {
  j = nlohmann::json{{"omega", entry.omega},
                     {"xi_s", entry.xi_s ? nlohmann::json(*entry.xi_s) : nlohmann::json(nullptr)},
                     {"xi_k", entry.xi_k
                                  ? nlohmann::json{entry.xi_k->first, entry.xi_k->second}
                                  : nlohmann::json(nullptr)},
                     {"method", entry.method},
                     {"flagged", entry.flagged}};
}

void to_json(nlohmann::json& j, const ImageChecks& checks) {
  j = nlohmann::json{{"sign_prefix_square_zero", checks.sign_prefix_square_zero},
                     {"column_bound", checks.column_bound},
                     {"swap_closure", checks.swap_closure},
                     {"regular_attained", checks.regular_attained},
                     {"maximal_matches_expected", checks.maximal_matches_expected}};
}

void to_json(nlohmann::json& j, const ImageReport& report) {
  j = nlohmann::json{{"n", report.n},
                     {"classes", report.classes},
                     {"maximal", report.maximal},
                     {"checks", report.checks}};
}

nlohmann::json matrix_to_json(const PrimeFieldMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) {
      row.push_back(m.at(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

PrimeFieldMatrix matrix_from_json(const nlohmann::json& j, std::uint64_t prime) {
  require(j.is_array() && !j.empty(), "matrix must be a nonempty array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(j.size());
  for (const auto& row : j) {
    require(row.is_array(), "matrix rows must be arrays");
    std::vector<std::int64_t> entries;
    entries.reserve(row.size());
    for (const auto& v : row) {
      require(v.is_number_integer(), "matrix entries must be integers");
      entries.push_back(v.get<std::int64_t>());
    }
    require(rows.empty() || entries.size() == rows.front().size(),
            "matrix rows must all have the same length");
    rows.push_back(std::move(entries));
  }
  return PrimeFieldMatrix::from_rows(rows, prime);
}

}  // namespace steinberg

namespace nlohmann {

void adl_serializer<steinberg::Triple>::to_json(json& j, const steinberg::Triple& t) {
  j = json{{"T1", t.t1()}, {"T2", t.t2()}, {"nu", t.nu()}};
}

steinberg::Triple adl_serializer<steinberg::Triple>::from_json(const json& j) {
  auto get = [&j](const char* key) -> const json& {
    if (!j.is_object() || !j.contains(key)) {
      throw steinberg::DomainError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
  };
  return steinberg::Triple(get("T1").get<steinberg::Tableau>(),
                           get("T2").get<steinberg::Tableau>(),
                           get("nu").get<steinberg::Partition>());
}

void adl_serializer<steinberg::OrbitRep>::to_json(json& j, const steinberg::OrbitRep& omega) {
  j = json{{"tau1", omega.tau1()}, {"tau2", omega.tau2()}};
}

steinberg::OrbitRep adl_serializer<steinberg::OrbitRep>::from_json(const json& j) {
  auto get = [&j](const char* key) -> const json& {
    if (!j.is_object() || !j.contains(key)) {
      throw steinberg::DomainError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
  };
  return steinberg::OrbitRep(get("tau1").get<steinberg::PartialPermutation>(),
                             get("tau2").get<steinberg::PartialPermutation>());
}

}  // namespace nlohmann
