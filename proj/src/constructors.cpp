#include "semigraphs/constructors.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>

namespace semigraphs {

Semigroup make_monogenic(unsigned m, unsigned r) {
  if (m < 1 || r < 1) {
    throw InvalidParameters("monogenic semigroup needs index >= 1 and period >= 1");
  }
  const unsigned n = m + r - 1;
  std::vector<element> table(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      // Ids i, j stand for a^(i+1), a^(j+1).
      unsigned s = i + j + 2;
      if (s > n) {
        s = m + (s - m) % r;
      }
      table[static_cast<std::size_t>(i) * n + j] = s - 1;
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  names.emplace_back("a");
  for (unsigned e = 2; e <= n; ++e) {
    names.push_back("a^" + std::to_string(e));
  }
  return Semigroup(n, std::move(table), std::move(names));
}

Semigroup make_cyclic_group(unsigned n) { return make_monogenic(1, n); }

Semigroup make_brandt(unsigned n) {
  if (n < 1) {
    throw InvalidParameters("Brandt semigroup needs n >= 1");
  }
  const unsigned order = n * n + 1;
  const auto pair_id = [n](unsigned i, unsigned j) {  // 1-based i, j
    return (i - 1) * n + j;
  };
  std::vector<element> table(static_cast<std::size_t>(order) * order, 0);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      for (unsigned k = 1; k <= n; ++k) {
        for (unsigned l = 1; l <= n; ++l) {
          if (j == k) {
            table[static_cast<std::size_t>(pair_id(i, j)) * order +
                  pair_id(k, l)] = pair_id(i, l);
          }
        }
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(order);
  names.emplace_back("0");
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return Semigroup(order, std::move(table), std::move(names));
}

Semigroup make_zn_mult(unsigned n) {
  if (n < 1) {
    throw InvalidParameters("Zmult needs n >= 1");
  }
  std::vector<element> table(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] =
          static_cast<element>((static_cast<unsigned long>(i) * j) % n);
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
  }
  return Semigroup(n, std::move(table), std::move(names));
}

Semigroup make_direct_product(const Semigroup& a, const Semigroup& b) {
  const unsigned na = a.order();
  const unsigned nb = b.order();
  const unsigned n = na * nb;
  std::vector<element> table(static_cast<std::size_t>(n) * n);
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      const element xa = x / nb, xb = x % nb;
      const element ya = y / nb, yb = y % nb;
      table[static_cast<std::size_t>(x) * n + y] =
          a.product(xa, ya) * nb + b.product(xb, yb);
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (unsigned x = 0; x < n; ++x) {
    names.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  }
  return Semigroup(n, std::move(table), std::move(names));
}

Semigroup signs_semigroup() {
  // Values -1, 0, 1 get ids 0, 1, 2.
  const auto id_of = [](int v) { return static_cast<element>(v + 1); };
  std::vector<element> table(9);
  for (int x = -1; x <= 1; ++x) {
    for (int y = -1; y <= 1; ++y) {
      table[static_cast<std::size_t>(id_of(x)) * 3 + id_of(y)] = id_of(x * y);
    }
  }
  return Semigroup(3, std::move(table), {"-1", "0", "1"});
}

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  // Split into atoms on 'x' outside parentheses, then parse each as
  // name [ "(" int {"," int} ")" ].
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
      if (depth < 0) {
        throw InvalidParameters("unbalanced \")\" in \"" + text + "\"");
      }
    }
    if (depth == 0 && (c == 'x' || c == 'X')) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) {
    throw InvalidParameters("unbalanced \"(\" in \"" + text + "\"");
  }
  parts.push_back(cur);

  FamilySpec spec;
  for (const std::string& raw : parts) {
    std::string token;
    for (char c : raw) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        token += c;
      }
    }
    std::string name;
    std::vector<unsigned> args;
    std::size_t pos = 0;
    while (pos < token.size() && token[pos] != '(') {
      name += token[pos++];
    }
    if (pos < token.size()) {
      // token[pos] == '('; arguments up to the trailing ')'.
      if (token.back() != ')') {
        throw InvalidParameters("expected \")\" at the end of \"" + raw + "\"");
      }
      std::string body = token.substr(pos + 1, token.size() - pos - 2);
      if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
          const std::size_t comma = body.find(',', start);
          const std::string arg = body.substr(
              start, comma == std::string::npos ? std::string::npos
                                                : comma - start);
          if (arg.empty() ||
              !std::all_of(arg.begin(), arg.end(), [](unsigned char c) {
                return std::isdigit(c);
              })) {
            throw InvalidParameters("expected an integer argument in \"" +
                                    raw + "\"");
          }
          args.push_back(static_cast<unsigned>(std::stoul(arg)));
          if (comma == std::string::npos) {
            break;
          }
          start = comma + 1;
        }
      }
    }

    const std::string key = lowercase(name);
    Atom atom;
    auto expect_args = [&](std::size_t count, const char* shape) {
      if (args.size() != count) {
        throw InvalidParameters("\"" + name + "\" expects " +
                                std::string(shape));
      }
    };
    if (key == "m") {
      expect_args(2, "two arguments, as in M(3,2)");
      atom.family = Family::Monogenic;
    } else if (key == "c") {
      expect_args(1, "one argument, as in C(6)");
      atom.family = Family::Cyclic;
    } else if (key == "b") {
      expect_args(1, "one argument, as in B(2)");
      atom.family = Family::Brandt;
    } else if (key == "zmult") {
      expect_args(1, "one argument, as in Zmult(4)");
      atom.family = Family::ZnMult;
    } else if (key == "signs") {
      expect_args(0, "no arguments");
      atom.family = Family::Signs;
    } else {
      throw InvalidParameters("unknown family \"" + name + "\" in \"" + text +
                              "\"");
    }
    atom.args = std::move(args);
    spec.factors_.push_back(std::move(atom));
  }

  std::string canonical;
  for (std::size_t i = 0; i < spec.factors_.size(); ++i) {
    if (i > 0) {
      canonical += "x";
    }
    const Atom& atom = spec.factors_[i];
    switch (atom.family) {
      case Family::Monogenic:
        canonical += "M";
        break;
      case Family::Cyclic:
        canonical += "C";
        break;
      case Family::Brandt:
        canonical += "B";
        break;
      case Family::ZnMult:
        canonical += "Zmult";
        break;
      case Family::Signs:
        canonical += "signs";
        break;
    }
    if (!atom.args.empty()) {
      canonical += "(";
      for (std::size_t k = 0; k < atom.args.size(); ++k) {
        if (k > 0) {
          canonical += ",";
        }
        canonical += std::to_string(atom.args[k]);
      }
      canonical += ")";
    }
  }
  spec.text_ = std::move(canonical);
  return spec;
}

Semigroup FamilySpec::build() const {
  const auto build_atom = [](const Atom& atom) {
    switch (atom.family) {
      case Family::Monogenic:
        return make_monogenic(atom.args[0], atom.args[1]);
      case Family::Cyclic:
        return make_cyclic_group(atom.args[0]);
      case Family::Brandt:
        return make_brandt(atom.args[0]);
      case Family::ZnMult:
        return make_zn_mult(atom.args[0]);
      case Family::Signs:
        return signs_semigroup();
    }
    throw InvalidParameters("unreachable family");
  };
  Semigroup result = build_atom(factors_.front());
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    result = make_direct_product(result, build_atom(factors_[i]));
  }
  return result;
}

Semigroup build_construct(const std::string& text) {
  try {
    return FamilySpec::parse(text).build();
  } catch (const InvalidParameters&) {
    std::error_code ec;
    if (std::filesystem::exists(text, ec)) {
      return load_semigroup_file(text);
    }
    throw;
  }
}

}  // namespace semigraphs
