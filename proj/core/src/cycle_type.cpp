#include "skeinpf/cycle_type.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "skeinpf/errors.hpp"

namespace skeinpf {

CycleType CycleType::from_parts(const std::vector<unsigned>& parts) {
  if (parts.empty()) throw PreconditionError("cycle type needs at least one part");
  CycleType ct;
  for (unsigned p : parts) {
    if (p == 0) throw PreconditionError("cycle lengths must be positive");
    ++ct.r_[p];
    ct.n_ += p;
  }
  return ct;
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') continue;
    std::string_view tok = text.substr(start, i - start);
    start = i + 1;
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) throw ParseError("partition \"" + std::string(text) + "\" has an empty part");
    if (!std::all_of(tok.begin(), tok.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("partition part \"" + std::string(tok) + "\" is not a positive integer");
    }
    if (tok.size() > 6) throw ParseError("partition part \"" + std::string(tok) + "\" is too large");
    unsigned v = static_cast<unsigned>(std::stoul(std::string(tok)));
    if (v == 0) throw ParseError("partition parts must be positive");
    parts.push_back(v);
  }
  return from_parts(parts);
}

unsigned CycleType::multiplicity(unsigned k) const {
  auto it = r_.find(k);
  return it == r_.end() ? 0 : it->second;
}

std::vector<unsigned> CycleType::parts() const {
  std::vector<unsigned> out;
  for (auto it = r_.rbegin(); it != r_.rend(); ++it)
    out.insert(out.end(), it->second, it->first);
  return out;
}

std::string CycleType::to_string() const {
  std::string out;
  for (const auto& [k, r] : r_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + "^" + std::to_string(r);
  }
  return out;
}

std::vector<std::size_t> natural_representative(const CycleType& ct) {
  std::vector<std::size_t> perm(ct.size());
  std::size_t start = 0;
  for (unsigned len : ct.parts()) {
    for (unsigned i = 0; i < len; ++i) perm[start + i] = start + (i + 1) % len;
    start += len;
  }
  return perm;
}

}  // namespace skeinpf
