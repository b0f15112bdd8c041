#include "gammahat/chern.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gammahat/error.hpp"
#include "json.hpp"

namespace gammahat {

ChernData::ChernData(std::string name, int complex_dimension)
    : name_(std::move(name)), dimension_(complex_dimension) {
  if (complex_dimension < 0) throw Error(Errc::invalid_argument, "complex dimension must be non-negative");
}

Integer ChernData::number(const Partition& lambda) const {
  auto it = numbers_.find(lambda);
  return it == numbers_.end() ? Integer(0) : it->second;
}

void ChernData::set(const Partition& lambda, const Integer& value) {
  if (lambda.weight() != dimension_)
    throw Error(Errc::invalid_argument, "Chern number key (" + lambda.to_string() + ") has weight " +
                                            std::to_string(lambda.weight()) + " but dimension is " +
                                            std::to_string(dimension_));
  if (value == 0) {
    numbers_.erase(lambda);
  } else {
    numbers_[lambda] = value;
  }
}

ChernData chern_point() {
  ChernData m("point", 0);
  m.set(Partition(), 1);
  return m;
}

ChernData chern_cpn(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "cpn requires n >= 1");
  ChernData m("cpn:" + std::to_string(n), n);
  for (const auto& lambda : partitions_of(n)) {
    Integer value = 1;
    for (int part : lambda.parts()) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), n + 1, part);
      value *= b;
    }
    m.set(lambda, value);
  }
  return m;
}

ChernData chern_k3() {
  ChernData m("k3", 2);
  m.set({2}, 24);
  return m;
}

ChernData chern_s2() {
  ChernData s("s2", 1);
  const ChernData cp1 = chern_cpn(1);
  for (const auto& [lambda, v] : cp1.numbers()) s.set(lambda, v);
  return s;
}

ChernData chern_lebrun(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "lebrun requires n >= 1");
  ChernData m("lebrun:" + std::to_string(n), 3);
  m.set({2, 1}, Integer(48) * n);
  m.set({3}, 48);
  return m;
}

namespace {

// c_k(A x B) = sum_{i+j=k} c_i(A) c_j(B). Expanding c_lambda over all
// choices of (i, j) per factor, only the bidegree (dim A, dim B) part pairs
// nontrivially with [A x B].
void expand_product(const std::vector<int>& parts, std::size_t pos, std::vector<int>& left,
                    std::vector<int>& right, int left_weight, const ChernData& a, const ChernData& b,
                    Integer& total) {
  if (pos == parts.size()) {
    if (left_weight != a.dimension()) return;
    total += a.number(Partition(left)) * b.number(Partition(right));
    return;
  }
  const int k = parts[pos];
  for (int i = 0; i <= k; ++i) {
    const int j = k - i;
    if (i > a.dimension() || j > b.dimension() || left_weight + i > a.dimension()) continue;
    if (i) left.push_back(i);
    if (j) right.push_back(j);
    expand_product(parts, pos + 1, left, right, left_weight + i, a, b, total);
    if (i) left.pop_back();
    if (j) right.pop_back();
  }
}

}  // namespace

ChernData chern_product(const ChernData& a, const ChernData& b) {
  ChernData m("product(" + a.name() + "," + b.name() + ")", a.dimension() + b.dimension());
  for (const auto& lambda : partitions_of(m.dimension())) {
    Integer total = 0;
    std::vector<int> left, right;
    expand_product(lambda.parts(), 0, left, right, 0, a, b, total);
    m.set(lambda, total);
  }
  return m;
}

namespace {

Integer json_integer(const nlohmann::json& value, const std::string& field) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()));
    return Integer(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i) ok = ok && std::isdigit(static_cast<unsigned char>(s[i]));
    if (ok) return Integer(s);
  }
  throw Error(Errc::parse_error, "field '" + field + "': expected an integer, got " + value.dump());
}

}  // namespace

ChernData chern_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("manifold JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::parse_error, "manifold JSON: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "complex_dimension" && key != "chern_numbers")
      throw Error(Errc::parse_error, "field '" + key + "': unknown key");
  }
  std::string name = "file";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(Errc::parse_error, "field 'name': expected a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("complex_dimension"))
    throw Error(Errc::parse_error, "field 'complex_dimension': missing");
  const auto& dim_field = doc["complex_dimension"];
  if (!dim_field.is_number_integer() || dim_field.get<std::int64_t>() < 0 ||
      dim_field.get<std::int64_t>() > kMaxPartitionWeight)
    throw Error(Errc::parse_error, "field 'complex_dimension': expected an integer in [0, " +
                                       std::to_string(kMaxPartitionWeight) + "]");
  const int dim = static_cast<int>(dim_field.get<std::int64_t>());
  ChernData m(name, dim);
  if (!doc.contains("chern_numbers")) throw Error(Errc::parse_error, "field 'chern_numbers': missing");
  const auto& numbers = doc["chern_numbers"];
  if (!numbers.is_object()) throw Error(Errc::parse_error, "field 'chern_numbers': expected an object");
  for (const auto& [key, value] : numbers.items()) {
    const std::string field = "chern_numbers.\"" + key + "\"";
    Partition lambda;
    try {
      lambda = Partition::parse(key);
    } catch (const Error& e) {
      throw Error(Errc::parse_error, "field '" + field + "': " + e.what());
    }
    if (lambda.weight() != dim)
      throw Error(Errc::parse_error, "field '" + field + "': partition weight " + std::to_string(lambda.weight()) +
                                         " does not match complex_dimension " + std::to_string(dim));
    m.set(lambda, json_integer(value, field));
  }
  return m;
}

std::string chern_to_json(const ChernData& m) {
  nlohmann::ordered_json doc;
  doc["name"] = m.name();
  doc["complex_dimension"] = m.dimension();
  auto numbers = nlohmann::ordered_json::object();
  for (const auto& lambda : partitions_of(m.dimension())) {
    const Integer v = m.number(lambda);
    if (v.fits_slong_p()) {
      numbers[lambda.to_string()] = v.get_si();
    } else {
      numbers[lambda.to_string()] = v.get_str();
    }
  }
  doc["chern_numbers"] = numbers;
  return doc.dump(2);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  ChernData parse() {
    ChernData m = expression(false);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, "manifold spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                                       ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a positive integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  ChernData expression(bool nested) {
    if (consume("product(")) {
      ChernData a = expression(true);
      if (!consume(",")) fail("expected ','");
      ChernData b = expression(true);
      if (!consume(")")) fail("expected ')'");
      return chern_product(a, b);
    }
    if (consume("cpn:")) return chern_cpn(integer());
    if (consume("lebrun:")) return chern_lebrun(integer());
    if (consume("k3")) return chern_k3();
    if (consume("s2")) return chern_s2();
    if (consume("point")) return chern_point();
    if (consume("file:")) {
      std::size_t start = pos_;
      if (nested) {
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      } else {
        pos_ = text_.size();
      }
      std::string path(text_.substr(start, pos_ - start));
      if (path.empty()) fail("empty file path");
      std::ifstream in(path);
      if (!in) throw Error(Errc::parse_error, "cannot open manifold file '" + path + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      try {
        return chern_from_json(buffer.str());
      } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
      }
    }
    fail("expected cpn:<n>, k3, s2, point, lebrun:<n>, product(<a>,<b>) or file:<path>");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ChernData parse_manifold_spec(std::string_view spec) { return SpecParser(spec).parse(); }

}  // namespace gammahat
