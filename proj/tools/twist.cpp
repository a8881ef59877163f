// twist: decide twisted conjugacy in free groups for virtually inner
// automorphisms, with normal forms, class enumeration, a brute-force
// oracle, and certificate search.
//
// Exit codes: 0 positive answer / success, 1 negative answer,
// 2 usage or parse error, 3 resource cap exceeded, 70 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twist/automorphism.hpp"
#include "twist/delta.hpp"
#include "twist/oracle.hpp"
#include "twist/selftest.hpp"
#include "twist/twisted.hpp"

namespace {

struct CommonOptions {
  std::string aut_path;
  int m_max = 24;
  long window = 0;
  std::size_t size_cap = 100000;
  bool verbose = false;
};

struct LoadedAutomorphism {
  twist::Automorphism phi;
  twist::VirtuallyInnerCert cert;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw twist::parse_error("cannot open automorphism file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedAutomorphism load_automorphism(const CommonOptions& opt) {
  twist::ParsedAutomorphism parsed = twist::parse_automorphism(read_file(opt.aut_path));
  if (parsed.cert) return {std::move(parsed.phi), std::move(*parsed.cert)};
  auto cert = twist::find_cert(parsed.phi, opt.m_max);
  if (!cert)
    throw twist::parse_error("automorphism is not certified virtually inner within m-max " +
                             std::to_string(opt.m_max) +
                             "; supply 'm'/'delta' lines or raise --m-max");
  return {std::move(parsed.phi), std::move(*cert)};
}

twist::BuildOptions build_options(const CommonOptions& opt, std::vector<std::string>* trace) {
  twist::BuildOptions b;
  b.size_cap = opt.size_cap;
  b.window = opt.window;
  b.trace = trace;
  return b;
}

void print_trace(const std::vector<std::string>& trace) {
  for (const std::string& line : trace) std::cout << "# " << line << "\n";
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_aut = true) {
  auto* aut = cmd->add_option("--aut", opt.aut_path, "automorphism file");
  if (needs_aut) aut->required();
  cmd->add_option("--m-max", opt.m_max, "certificate search bound")->check(CLI::PositiveNumber);
  cmd->add_option("--window", opt.window, "conjugation scan window (0 = automatic)");
  cmd->add_option("--size-cap", opt.size_cap, "class size cap")->check(CLI::PositiveNumber);
  cmd->add_flag("--verbose", opt.verbose, "print the derivation trace");
}

int run(int argc, char** argv) {
  CLI::App app{"twisted conjugacy in finitely generated free groups"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string word_a, word_b;
  int rank = 0;
  int max_len = 6;
  std::uint64_t seed = 1;

  auto* cmd_reduce = app.add_subcommand("reduce", "freely reduce a word");
  cmd_reduce->add_option("--rank", rank, "ambient rank")->check(CLI::PositiveNumber);
  cmd_reduce->add_option("--aut", opt.aut_path, "take the rank from an automorphism file");
  cmd_reduce->add_option("word", word_a, "word to reduce")->required();

  auto* cmd_decide = app.add_subcommand("decide", "decide twisted conjugacy of two words");
  add_common(cmd_decide, opt);
  cmd_decide->add_option("u", word_a)->required();
  cmd_decide->add_option("v", word_b)->required();

  auto* cmd_nf = app.add_subcommand("nf", "twisted conjugacy normal form");
  add_common(cmd_nf, opt);
  cmd_nf->add_option("word", word_a)->required();

  auto* cmd_orbit = app.add_subcommand("orbit", "list the canonical finite class of a word");
  add_common(cmd_orbit, opt);
  cmd_orbit->add_option("word", word_a)->required();

  auto* cmd_oracle = app.add_subcommand("oracle", "bounded brute-force witness search");
  add_common(cmd_oracle, opt);
  cmd_oracle->add_option("--max-len", max_len, "witness length bound")->check(CLI::NonNegativeNumber);
  cmd_oracle->add_option("u", word_a)->required();
  cmd_oracle->add_option("v", word_b)->required();

  auto* cmd_cert = app.add_subcommand("cert", "find the least inner power certificate");
  add_common(cmd_cert, opt);

  auto* cmd_selftest = app.add_subcommand("selftest", "run the seeded property corpus");
  cmd_selftest->add_option("--seed", seed, "corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  std::vector<std::string> trace_storage;
  std::vector<std::string>* trace = opt.verbose ? &trace_storage : nullptr;

  if (cmd_reduce->parsed()) {
    if (rank == 0) {
      if (opt.aut_path.empty()) throw twist::parse_error("reduce needs --rank or --aut");
      rank = twist::parse_automorphism(read_file(opt.aut_path)).phi.rank();
    }
    std::cout << twist::format_word(twist::reduce(twist::parse_word(word_a, rank))) << "\n";
    return 0;
  }

  if (cmd_selftest->parsed()) return twist::run_selftest(seed, std::cout) == 0 ? 0 : 1;

  LoadedAutomorphism loaded = load_automorphism(opt);
  const twist::Automorphism& phi = loaded.phi;
  const twist::VirtuallyInnerCert& cert = loaded.cert;

  if (cmd_cert->parsed()) {
    if (trace) print_trace(trace_storage);
    std::cout << "m=" << cert.m << " delta=" << twist::format_word(cert.delta) << "\n";
    return 0;
  }

  if (cmd_decide->parsed()) {
    twist::Word u = twist::parse_word(word_a, phi.rank());
    twist::Word v = twist::parse_word(word_b, phi.rank());
    auto witness = twist::decide_twisted_conjugacy(u, v, phi, cert, build_options(opt, trace));
    if (trace) print_trace(trace_storage);
    if (!witness) {
      std::cout << "NO\n";
      return 1;
    }
    if (!twist::verify_makanin(phi, u, v, *witness))
      throw std::logic_error("witness failed final verification");
    std::cout << "YES witness=" << twist::format_word(*witness) << "\n";
    return 0;
  }

  if (cmd_nf->parsed()) {
    twist::Word v = twist::parse_word(word_a, phi.rank());
    twist::TwistedElement nf = twist::normal_form(v, phi, cert, build_options(opt, trace));
    if (!twist::verify_twisted(phi, twist::reduce(v), nf))
      throw std::logic_error("normal form witness failed verification");
    if (trace) print_trace(trace_storage);
    std::cout << twist::format_word(nf.word) << " witness=" << twist::format_word(nf.witness) << "\n";
    return 0;
  }

  if (cmd_orbit->parsed()) {
    twist::Word v = twist::parse_word(word_a, phi.rank());
    twist::TwistedClass cls = twist::build_class(v, phi, cert, build_options(opt, trace));
    if (trace) print_trace(trace_storage);
    for (const twist::TwistedElement& e : cls.elements()) std::cout << twist::format_word(e.word) << "\n";
    return 0;
  }

  if (cmd_oracle->parsed()) {
    twist::Word u = twist::parse_word(word_a, phi.rank());
    twist::Word v = twist::parse_word(word_b, phi.rank());
    auto witness = twist::brute_force_decide(u, v, phi, max_len);
    if (!witness) {
      std::cout << "NO max-len=" << max_len << "\n";
      return 1;
    }
    if (!twist::verify_makanin(phi, u, v, *witness))
      throw std::logic_error("oracle witness failed verification");
    std::cout << "YES witness=" << twist::format_word(*witness) << " max-len=" << max_len << "\n";
    return 0;
  }

  std::cerr << "no command\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const twist::cap_exceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
