#include "lbiso/params.hpp"

#include <cctype>

namespace lbiso {

ParamPoint::ParamPoint() {
  v_["lambda"] = Rational(1);
  v_["dt"] = Rational(1);
}

std::optional<int> ParamPoint::rate_index(const std::string& name, bool& is_sigma) {
  std::string_view digits;
  if (name.size() > 5 && name.compare(0, 5, "sigma") == 0) {
    is_sigma = true;
    digits = std::string_view(name).substr(5);
  } else if (name.size() > 1 && name[0] == 's') {
    is_sigma = false;
    digits = std::string_view(name).substr(1);
  } else {
    return std::nullopt;
  }
  int k = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    k = k * 10 + (ch - '0');
  }
  return k;
}

void ParamPoint::set(const std::string& name, const Rational& value) {
  bool is_sigma = false;
  if (auto k = rate_index(name, is_sigma)) {
    // Keep one canonical spelling per moment so stale counterparts cannot
    // disagree after reassignment.
    v_.erase((is_sigma ? "s" : "sigma") + std::to_string(*k));
  }
  if (name == "lambda" && value.sign() <= 0) throw Error("ParamPoint: lambda must be positive");
  if (name == "dt" && value.sign() <= 0) throw Error("ParamPoint: dt must be positive");
  v_[name] = value;
}

bool ParamPoint::has(const std::string& name) const {
  return find(name).has_value();
}

std::optional<Rational> ParamPoint::find(const std::string& name) const {
  auto it = v_.find(name);
  if (it != v_.end()) return it->second;
  bool is_sigma = false;
  if (auto k = rate_index(name, is_sigma)) {
    auto other = v_.find((is_sigma ? "s" : "sigma") + std::to_string(*k));
    if (other != v_.end()) {
      const Rational& x = other->second;
      if (is_sigma) {
        // sigma = 1/s - 1/2, needs s != 0
        if (x.is_zero()) throw Error("ParamPoint: s" + std::to_string(*k) + " is zero");
        return x.inverse() - Rational(1, 2);
      }
      // s = 1/(sigma + 1/2), needs sigma != -1/2
      Rational den = x + Rational(1, 2);
      if (den.is_zero()) throw Error("ParamPoint: sigma" + std::to_string(*k) + " = -1/2");
      return den.inverse();
    }
  }
  return std::nullopt;
}

Rational ParamPoint::get(const std::string& name) const {
  if (auto v = find(name)) return *v;
  throw Error("ParamPoint: missing parameter '" + name + "'");
}

Rational ParamPoint::s(int k) const { return get("s" + std::to_string(k)); }
Rational ParamPoint::sigma(int k) const { return get("sigma" + std::to_string(k)); }
bool ParamPoint::has_rate(int k) const { return has("s" + std::to_string(k)); }

}  // namespace lbiso
