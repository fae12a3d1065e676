#include "pauto/manifest.hpp"

#include <json.hpp>

#include "pauto/parse.hpp"

namespace pauto {

using nlohmann::json;

namespace {

json scalars_to_json(const std::vector<Cyclotomic>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

std::vector<Cyclotomic> scalars_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of scalar literals");
  std::vector<Cyclotomic> out;
  for (const auto& item : j) {
    if (item.is_string())
      out.push_back(parse_scalar(item.get<std::string>()));
    else if (item.is_number_integer())
      out.emplace_back(Rational(Integer(item.dump())));
    else
      throw std::invalid_argument("scalar literal must be a string or an integer");
  }
  return out;
}

json sequence_to_json(const CoeffSequence& s) {
  json j;
  j["prime"] = s.prime();
  j["prefix"] = scalars_to_json(s.prefix());
  if (s.has_zero_tail())
    j["tail"] = "zero";
  else
    j["tail"] = scalars_to_json(s.tail());
  return j;
}

CoeffSequence sequence_from_json(const json& j, std::optional<unsigned> default_prime) {
  if (!j.is_object()) throw std::invalid_argument("sequence record must be an object");
  unsigned p;
  if (j.contains("prime"))
    p = j.at("prime").get<unsigned>();
  else if (default_prime)
    p = *default_prime;
  else
    throw std::invalid_argument("sequence record needs a prime");
  std::vector<Cyclotomic> prefix = j.contains("prefix") ? scalars_from_json(j.at("prefix")) : std::vector<Cyclotomic>{};
  std::vector<Cyclotomic> tail;
  if (j.contains("tail")) {
    const json& t = j.at("tail");
    if (t.is_string()) {
      if (t.get<std::string>() != "zero") throw std::invalid_argument("tail must be \"zero\" or a list");
    } else {
      tail = scalars_from_json(t);
      if (tail.empty()) throw std::invalid_argument("repeating tail block must not be empty");
    }
  }
  return CoeffSequence(p, std::move(prefix), std::move(tail));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string print_sequence(const CoeffSequence& s) { return sequence_to_json(s).dump(2) + "\n"; }

CoeffSequence parse_sequence(std::string_view json_text) {
  try {
    return sequence_from_json(parse_json(json_text), std::nullopt);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad sequence record: ") + e.what());
  }
}

std::string print_manifest(const Manifest& m) {
  json j;
  j["prime"] = m.prime;
  j["sequences"] = json::array();
  for (const auto& s : m.sequences) j["sequences"].push_back(sequence_to_json(s));
  if (!m.alphas.empty()) {
    j["alphas"] = json::array();
    for (const auto& a : m.alphas) j["alphas"].push_back(a.to_string());
  }
  json bounds = json::object();
  if (m.max_degree) bounds["max_degree"] = *m.max_degree;
  if (m.levels) bounds["levels"] = *m.levels;
  if (m.k0) bounds["k0"] = *m.k0;
  if (!bounds.empty()) j["bounds"] = bounds;
  return j.dump(2) + "\n";
}

Manifest parse_manifest(std::string_view json_text) {
  try {
    const json j = parse_json(json_text);
    Manifest m;
    m.prime = j.at("prime").get<unsigned>();
    if (!is_prime(m.prime)) throw std::invalid_argument(std::to_string(m.prime) + " is not prime");
    if (j.contains("sequences"))
      for (const auto& s : j.at("sequences")) {
        m.sequences.push_back(sequence_from_json(s, m.prime));
        if (m.sequences.back().prime() != m.prime)
          throw std::invalid_argument("sequence prime differs from manifest prime");
      }
    if (j.contains("alphas"))
      for (const auto& a : j.at("alphas")) m.alphas.push_back(parse_alpha(a.get<std::string>(), m.prime));
    if (j.contains("bounds")) {
      const json& b = j.at("bounds");
      if (b.contains("max_degree")) m.max_degree = b.at("max_degree").get<unsigned>();
      if (b.contains("levels")) m.levels = b.at("levels").get<unsigned>();
      if (b.contains("k0")) m.k0 = b.at("k0").get<unsigned>();
    }
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad manifest: ") + e.what());
  }
}

RootOfUnity parse_alpha(std::string_view text, unsigned p) {
  const std::string s(text);
  const auto slash = s.find('/');
  auto digits = [](const std::string& t, bool allow_sign) {
    std::size_t i = allow_sign && !t.empty() && t[0] == '-' ? 1 : 0;
    return i < t.size() && t.find_first_not_of("0123456789", i) == std::string::npos;
  };
  if (!digits(s.substr(0, slash), true) || (slash != std::string::npos && !digits(s.substr(slash + 1), false)))
    throw std::invalid_argument("malformed alpha '" + s + "'; expected j/p^n");
  try {
    const Integer num(slash == std::string::npos ? s : s.substr(0, slash));
    const Integer den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (sgn(den) <= 0) throw std::invalid_argument("alpha denominator must be positive");
    Rational q(num, den);
    q.canonicalize();
    Integer d = q.get_den();
    unsigned n = 0;
    while (d % p == 0) {
      d /= p;
      ++n;
    }
    if (d != 1) throw std::invalid_argument("alpha " + s + " is not j/p^n for p = " + std::to_string(p));
    const Integer pn = Integer(q.get_den());
    Integer j = q.get_num() % pn;
    if (j < 0) j += pn;
    return RootOfUnity::from_exponent(p, n, j.get_si());
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed alpha '" + s + "'");
  }
}

}  // namespace pauto
