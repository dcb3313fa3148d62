#include "garside/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/artin.hpp"
#include "garside/bkl.hpp"
#include "garside/engine.hpp"
#include "garside/errors.hpp"
#include "garside/ncpartition.hpp"
#include "garside/oracle.hpp"
#include "garside/verify.hpp"
#include "garside/wordexpr.hpp"

namespace garside {

namespace {

using nlohmann::json;

json partition_json(const NcPartition& p) {
  json parts = json::array();
  for (const auto& part : p.parts()) parts.push_back(part);
  return parts;
}

json factors_json(const BklInstance& inst, const NormalForm& nf) {
  json factors = json::array();
  for (SimpleId f : nf.factors) factors.push_back(partition_json(inst.partition(f)));
  return factors;
}

std::string artin_word_str(const std::vector<SignedArtinGen>& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << '*';
    os << 's' << word[i].index;
    if (word[i].exp != 1) os << "^" << word[i].exp;
  }
  return os.str();
}

NormalForm positive_word_nf(const BklInstance& inst, const std::string& text) {
  WordExpr expr = parse_word(text, inst.strands());
  if (!expr.is_positive())
    throw std::invalid_argument("this command takes positive words only");
  auto word = expr.to_simples(inst);
  return normal_form(inst, word);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"band-generator braid engine"};
  app.name("garside");
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.require_subcommand(1);
  app.fallthrough();

  int n = 0, k = 0, d = 1, max_len = 3;
  std::string word1, word2;
  bool count_only = false, list_all = false;

  auto* nf_cmd = app.add_subcommand("nf", "left-greedy normal form of a positive word");
  nf_cmd->add_option("-n", n, "number of strands")->required();
  nf_cmd->add_option("word", word1, "positive word")->required();

  auto* eq_cmd = app.add_subcommand("eq", "decide equality of two signed words");
  eq_cmd->add_option("-n", n)->required();
  eq_cmd->add_option("word1", word1)->required();
  eq_cmd->add_option("word2", word2)->required();

  auto* lcm_cmd = app.add_subcommand("lcm", "right lcm of two positive words");
  lcm_cmd->add_option("-n", n)->required();
  lcm_cmd->add_option("word1", word1)->required();
  lcm_cmd->add_option("word2", word2)->required();

  auto* gcd_cmd = app.add_subcommand("gcd", "left gcd of two positive words");
  gcd_cmd->add_option("-n", n)->required();
  gcd_cmd->add_option("word1", word1)->required();
  gcd_cmd->add_option("word2", word2)->required();

  auto* conj_cmd = app.add_subcommand(
      "conj", "conjugate a positive word by the k-th power of delta");
  conj_cmd->add_option("-n", n)->required();
  conj_cmd->add_option("-k", k, "power of delta")->required();
  conj_cmd->add_option("word", word1)->required();

  auto* cent_cmd = app.add_subcommand(
      "centralizer", "atoms of the centralizer of delta^(n/d)");
  cent_cmd->add_option("-n", n)->required();
  cent_cmd->add_option("-d", d, "divisor of n")->required();

  auto* simples_cmd = app.add_subcommand("simples", "canonical factors");
  simples_cmd->add_option("-n", n)->required();
  simples_cmd->add_flag("--count", count_only, "print the count");
  simples_cmd->add_flag("--list", list_all, "print every simple");

  auto* artin_cmd = app.add_subcommand(
      "to-artin", "rewrite a band-generator word over Artin generators");
  artin_cmd->add_option("-n", n)->required();
  artin_cmd->add_option("word", word1)->required();

  auto* verify_cmd = app.add_subcommand(
      "verify", "compare the engine with the presentation oracle");
  verify_cmd->add_option("-n", n)->required();
  verify_cmd->add_option("--max-len", max_len, "max word length for the sweep");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*nf_cmd || *conj_cmd) {
      BklInstance inst(n);
      NormalForm nf = positive_word_nf(inst, word1);
      if (*conj_cmd) nf = conj_by_delta(nf, k);
      if (as_json)
        out << json{{"n", n}, {"factors", factors_json(inst, nf)}} << "\n";
      else
        out << format_normal_form(inst, nf) << "\n";
      return 0;
    }

    if (*eq_cmd) {
      BklInstance inst(n);
      auto f1 = fraction_from_word(inst, parse_word(word1, n).to_signed(inst));
      auto f2 = fraction_from_word(inst, parse_word(word2, n).to_signed(inst));
      bool equal = fraction_equal(f1, f2);
      if (as_json)
        out << json{{"n", n}, {"equal", equal}} << "\n";
      else
        out << (equal ? "equal" : "not equal") << "\n";
      return equal ? 0 : 1;
    }

    if (*lcm_cmd || *gcd_cmd) {
      BklInstance inst(n);
      NormalForm u = positive_word_nf(inst, word1);
      NormalForm v = positive_word_nf(inst, word2);
      NormalForm r = *lcm_cmd ? right_lcm(u, v) : left_gcd(u, v);
      if (as_json)
        out << json{{"n", n}, {"factors", factors_json(inst, r)}} << "\n";
      else
        out << format_normal_form(inst, r) << "\n";
      return 0;
    }

    if (*cent_cmd) {
      BklInstance inst(n);
      auto atoms = centralizer_atoms(inst, d);
      if (as_json) {
        json list = json::array();
        for (const auto& p : atoms) list.push_back(partition_json(p));
        out << json{{"n", n}, {"d", d}, {"atoms", list}} << "\n";
      } else {
        for (const auto& p : atoms) out << p.str() << "\n";
      }
      return 0;
    }

    if (*simples_cmd) {
      auto all = enumerate_noncrossing(n);
      if (as_json) {
        json j{{"n", n}, {"count", all.size()}};
        if (list_all) {
          json list = json::array();
          for (const auto& p : all) list.push_back(partition_json(p));
          j["simples"] = list;
        }
        out << j << "\n";
      } else if (list_all) {
        for (const auto& p : all) out << p.str() << "\n";
      } else {
        out << all.size() << "\n";
      }
      return 0;
    }

    if (*artin_cmd) {
      WordExpr expr = parse_word(word1, n);
      auto artin = to_artin(n, expr.to_band_atoms());
      if (as_json) {
        json list = json::array();
        for (const auto& g : artin) list.push_back({g.index, g.exp});
        out << json{{"n", n}, {"word", list}} << "\n";
      } else {
        out << artin_word_str(artin) << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      VerifyReport report = verify_against_oracle(n, max_len);
      if (as_json) {
        json checks = json::array();
        for (const auto& c : report.checks)
          checks.push_back({{"ok", c.ok}, {"text", c.text}});
        out << json{{"n", n},
                    {"max_len", max_len},
                    {"ok", report.ok()},
                    {"checks", checks}}
            << "\n";
      } else {
        for (const auto& c : report.checks)
          out << (c.ok ? "ok   " : "FAIL ") << c.text << "\n";
        out << (report.ok() ? "all checks passed" : "CHECKS FAILED") << "\n";
      }
      return report.ok() ? 0 : 2;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedInstanceError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace garside
