#include "hankelforge/parsing.hpp"

#include "hankelforge/errors.hpp"

namespace hankelforge {

namespace {

std::vector<Rat> parse_list_at(const std::string& spec, std::size_t base) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    std::string trimmed = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    try {
      out.push_back(rat_from_string(trimmed));
    } catch (const std::invalid_argument&) {
      throw ParseError("expected a rational coefficient, got '" + trimmed + "'", base + pos);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<Rat> parse_rat_list(const std::string& spec) { return parse_list_at(spec, 0); }

Polynomial parse_polynomial(const std::string& spec) {
  return Polynomial(parse_rat_list(spec));
}

RationalFunction parse_rational_function(const std::string& spec) {
  std::size_t semi = spec.find(';');
  if (semi == std::string::npos) return RationalFunction(parse_polynomial(spec));
  if (spec.find(';', semi + 1) != std::string::npos)
    throw ParseError("more than one ';' in rational function spec", spec.find(';', semi + 1));
  Polynomial num{parse_list_at(spec.substr(0, semi), 0)};
  Polynomial den{parse_list_at(spec.substr(semi + 1), semi + 1)};
  if (den.coeff(0) == 0)
    throw ParseError("denominator must have a nonzero constant term", semi + 1);
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace hankelforge
