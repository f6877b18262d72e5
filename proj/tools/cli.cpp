#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>

#include "bgnlab/files.hpp"

namespace bgnlab::cli {

namespace fs = std::filesystem;

namespace {

// Raised for conditions the user must fix; maps to kUsageError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rng make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return Rng(*seed);
  std::random_device rd;
  std::seed_seq seq{rd(), rd(), rd(), rd()};
  return Rng(seq);
}

BigInt decimal_option(const std::string& text, const std::string& name) {
  try {
    return parse_decimal(text, name);
  } catch (const Error& e) {
    throw UsageError(std::string("option --") + name + ": " + e.what());
  }
}

// Prefixes any error with the file it came from.
template <typename Fn>
auto with_file(const fs::path& path, Fn&& fn) {
  try {
    return fn(read_key_values(path));
  } catch (const Error& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw Error(e.kind(), path.string() + ": " + msg);
  }
}

CommitmentKey load_key(const fs::path& path) {
  return with_file(path, [](const KeyValues& kv) { return parse_key(kv); });
}

SecretKey load_secret(const fs::path& path) {
  return with_file(path, [](const KeyValues& kv) { return parse_secret(kv); });
}

struct Factorization {
  BigInt p;
  BigInt q;
};

// p and q come from a context file when given, otherwise from an extraction
// key (q) and n.
Factorization resolve_factorization(const CommitmentKey& ck, const std::optional<SecretKey>& secret,
                                    const std::string& ctx_path) {
  if (!ctx_path.empty()) {
    const GroupPtr full = with_file(ctx_path, [](const KeyValues& kv) {
      return GroupContext::from_fields(kv);
    });
    if (!full->has_factorization()) {
      throw Error(ErrorKind::malformed, ctx_path + ": context lacks fields 'p' and 'q'");
    }
    if (!full->same_group(*ck.group)) {
      throw Error(ErrorKind::context_mismatch, ctx_path + ": context does not match the key");
    }
    return {full->p(), full->q()};
  }
  if (!secret || secret->kind != SecretKind::extraction) {
    throw UsageError("the factorization of n is needed: pass an extraction key or --ctx");
  }
  const ExtractionKey xk = bind_extraction_key(ck, *secret);
  return {ck.group->n() / xk.q, xk.q};
}

void write_out(const fs::path& path, const KeyValues& kv) { write_key_values(path, kv); }

void print(std::ostream& out, const KeyValues& kv) { out << kv.format(); }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::setup_failed:
    case ErrorKind::not_extractable:
    case ErrorKind::opening_mismatch:
    case ErrorKind::degenerate_pairing:
    case ErrorKind::not_invertible:
      return kFailed;
    default:
      return kUsageError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composite-order pairing commitment laboratory", "bgnlab"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  int result = kOk;

  // params
  auto* params = app.add_subcommand("params", "Generate a group context");
  unsigned bits_p = 0, bits_q = 0;
  std::string fixed_p, fixed_q, backend_name = "transparent", params_out;
  params->add_option("--bits-p", bits_p, "Bit length of p")->check(CLI::Range(2, 64));
  params->add_option("--bits-q", bits_q, "Bit length of q")->check(CLI::Range(2, 64));
  params->add_option("--p", fixed_p, "Use this p instead of generating one");
  params->add_option("--q", fixed_q, "Use this q instead of generating one");
  params->add_option("--backend", backend_name)->check(CLI::IsMember({"transparent", "curve"}));
  params->add_option("--seed", seed);
  params->add_option("--out", params_out, "Context file")->required();

  // keygen
  auto* keygen = app.add_subcommand("keygen", "Generate a commitment key");
  std::string mode_name, ctx_path, ck_out, secret_out, fixed_x;
  keygen->add_option("--mode", mode_name)->required()->check(CLI::IsMember({"binding", "hiding"}));
  keygen->add_option("--ctx", ctx_path)->required();
  keygen->add_option("--ck-out", ck_out)->required();
  keygen->add_option("--secret-out", secret_out)->required();
  keygen->add_option("--x", fixed_x, "Pin the secret exponent x");
  keygen->add_option("--seed", seed);

  // commit
  auto* commit_cmd = app.add_subcommand("commit", "Commit to a message");
  std::string ck_path, m_text, r_text, out_path, opening_out;
  commit_cmd->add_option("--ck", ck_path)->required();
  commit_cmd->add_option("--m", m_text)->required();
  commit_cmd->add_option("--r", r_text, "Randomizer; sampled from Z_n when absent");
  commit_cmd->add_option("--seed", seed);
  commit_cmd->add_option("--out", out_path)->required();
  commit_cmd->add_option("--opening-out", opening_out);

  // prove
  auto* prove = app.add_subcommand("prove", "Prove a commitment contains 0 or 1");
  std::string opening_path;
  prove->add_option("--ck", ck_path)->required();
  prove->add_option("--opening", opening_path)->required();
  prove->add_option("--out", out_path)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check e(c, c/g) = e(h, pi)");
  std::string c_path, pi_path;
  verify_cmd->add_option("--ck", ck_path)->required();
  verify_cmd->add_option("--c", c_path)->required();
  verify_cmd->add_option("--pi", pi_path)->required();

  // extract
  auto* extract_cmd = app.add_subcommand("extract", "Recover m with an extraction key");
  std::string secret_path, bound_text = kDefaultExtractionBound.get_str();
  extract_cmd->add_option("--ck", ck_path)->required();
  extract_cmd->add_option("--secret", secret_path)->required();
  extract_cmd->add_option("--c", c_path)->required();
  extract_cmd->add_option("--bound", bound_text, "Search bound B");

  // open
  auto* open_cmd = app.add_subcommand("open", "Equivocate with a trapdoor key");
  std::string m_new_text;
  open_cmd->add_option("--ck", ck_path)->required();
  open_cmd->add_option("--secret", secret_path)->required();
  open_cmd->add_option("--c", c_path)->required();
  open_cmd->add_option("--opening", opening_path)->required();
  open_cmd->add_option("--m-new", m_new_text)->required();
  open_cmd->add_option("--out", out_path)->required();

  // forge
  auto* forge_cmd = app.add_subcommand("forge", "Build a forged (c, pi) from the factorization");
  std::string beta1_text;
  bool allow_hiding = false;
  forge_cmd->add_option("--ck", ck_path)->required();
  forge_cmd->add_option("--secret", secret_path);
  forge_cmd->add_option("--ctx", ctx_path, "Context file carrying p and q");
  forge_cmd->add_option("--beta1", beta1_text);
  forge_cmd->add_option("--seed", seed);
  forge_cmd->add_flag("--allow-hiding", allow_hiding);
  forge_cmd->add_option("--out", out_path)->required();

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "Classify c with the trapdoor q");
  audit_cmd->add_option("--ck", ck_path)->required();
  audit_cmd->add_option("--secret", secret_path);
  audit_cmd->add_option("--ctx", ctx_path);
  audit_cmd->add_option("--c", c_path)->required();

  // census
  auto* census_cmd = app.add_subcommand("census", "Enumerate all accepting (c, pi) pairs");
  unsigned threads = 0;
  census_cmd->add_option("--ck", ck_path)->required();
  census_cmd->add_option("--secret", secret_path);
  census_cmd->add_option("--ctx", ctx_path);
  census_cmd->add_option("--threads", threads);
  census_cmd->add_option("--out", out_path);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property suites");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("bgnlab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (params->parsed()) {
      Rng rng = make_rng(seed);
      const Backend backend = parse_backend(backend_name);
      BigInt p, q;
      if (!fixed_p.empty() || !fixed_q.empty()) {
        if (fixed_p.empty() || fixed_q.empty()) throw UsageError("--p and --q go together");
        p = decimal_option(fixed_p, "p");
        q = decimal_option(fixed_q, "q");
      } else {
        if (bits_p == 0 || bits_q == 0) throw UsageError("--bits-p and --bits-q are required");
        do {
          p = gen_prime(bits_p, rng);
          q = gen_prime(bits_q, rng);
        } while (p == q || (backend == Backend::curve && (p == 2 || q == 2)));
        if (p > q) std::swap(p, q);
      }
      const GroupPtr group = backend == Backend::transparent
                                 ? GroupContext::setup_transparent(p, q)
                                 : GroupContext::setup_curve(p, q, rng);
      const KeyValues fields = context_fields(*group);
      write_out(params_out, fields);
      print(out, fields);
    } else if (keygen->parsed()) {
      Rng rng = make_rng(seed);
      const GroupPtr group = with_file(ctx_path, [](const KeyValues& kv) {
        return GroupContext::from_fields(kv);
      });
      if (!group->has_factorization()) {
        throw Error(ErrorKind::malformed, ctx_path + ": key generation needs fields 'p' and 'q'");
      }
      const std::optional<BigInt> x =
          fixed_x.empty() ? std::nullopt : std::optional(decimal_option(fixed_x, "x"));
      if (parse_key_mode(mode_name) == KeyMode::binding) {
        const auto [ck, xk] = x ? binding_keygen_with(group, *x) : binding_keygen(group, rng);
        write_out(ck_out, key_fields(ck));
        write_out(secret_out, secret_fields(xk));
        out << "mode=binding\nh=" << encode(ck.h) << "\n";
      } else {
        const auto [ck, tk] = x ? hiding_keygen_with(group, *x) : hiding_keygen(group, rng);
        write_out(ck_out, key_fields(ck));
        write_out(secret_out, secret_fields(tk));
        out << "mode=hiding\nh=" << encode(ck.h) << "\n";
      }
    } else if (commit_cmd->parsed()) {
      Rng rng = make_rng(seed);
      const CommitmentKey ck = load_key(ck_path);
      const BigInt m = decimal_option(m_text, "m");
      const BigInt r = r_text.empty() ? random_below(ck.group->n(), rng)
                                      : mod(decimal_option(r_text, "r"), ck.group->n());
      const Commitment c = commit(ck, m, r);
      write_out(out_path, commitment_fields(c));
      if (!opening_out.empty()) write_out(opening_out, opening_fields({m, r}));
      print(out, commitment_fields(c));
    } else if (prove->parsed()) {
      const CommitmentKey ck = load_key(ck_path);
      const Opening o = with_file(opening_path, [](const KeyValues& kv) { return parse_opening(kv); });
      const WIProof pi = wi_prove(ck, o.m, o.r);
      write_out(out_path, proof_fields(pi));
      print(out, proof_fields(pi));
    } else if (verify_cmd->parsed()) {
      const CommitmentKey ck = load_key(ck_path);
      const Commitment c = with_file(c_path, [&](const KeyValues& kv) { return parse_commitment(kv, ck); });
      const WIProof pi = with_file(pi_path, [&](const KeyValues& kv) { return parse_proof(kv, ck); });
      const bool ok = verify(ck, c, pi);
      out << (ok ? "accept" : "reject") << "\n";
      result = ok ? kOk : kReject;
    } else if (extract_cmd->parsed()) {
      const CommitmentKey ck = load_key(ck_path);
      const ExtractionKey xk = bind_extraction_key(ck, load_secret(secret_path));
      const Commitment c = with_file(c_path, [&](const KeyValues& kv) { return parse_commitment(kv, ck); });
      const BigInt bound = decimal_option(bound_text, "bound");
      if (bound <= 0) throw UsageError("option --bound: must be positive");
      out << "m=" << extract(xk, c, bound).get_str() << "\n";
    } else if (open_cmd->parsed()) {
      const CommitmentKey ck = load_key(ck_path);
      const TrapdoorKey tk = bind_trapdoor_key(ck, load_secret(secret_path));
      const Commitment c = with_file(c_path, [&](const KeyValues& kv) { return parse_commitment(kv, ck); });
      const Opening current = with_file(opening_path, [](const KeyValues& kv) { return parse_opening(kv); });
      const Opening moved = trapdoor_open(tk, c, current, decimal_option(m_new_text, "m-new"));
      write_out(out_path, opening_fields(moved));
      print(out, opening_fields(moved));
    } else if (forge_cmd->parsed()) {
      Rng rng = make_rng(seed);
      const CommitmentKey ck = load_key(ck_path);
      const std::optional<SecretKey> secret =
          secret_path.empty() ? std::nullopt : std::optional(load_secret(secret_path));
      const Factorization f = resolve_factorization(ck, secret, ctx_path);
      const std::optional<BigInt> beta1 =
          beta1_text.empty() ? std::nullopt : std::optional(decimal_option(beta1_text, "beta1"));
      const ForgeryRecord fr = forge(ck, f.p, f.q, beta1, rng, ForgeOptions{allow_hiding});
      write_out(out_path, forgery_fields(fr));
      print(out, forgery_fields(fr));
      print(out, claim_report_fields(claim_report(fr, ck, f.p, f.q)));
    } else if (audit_cmd->parsed()) {
      const CommitmentKey ck = load_key(ck_path);
      const std::optional<SecretKey> secret =
          secret_path.empty() ? std::nullopt : std::optional(load_secret(secret_path));
      const Factorization f = resolve_factorization(ck, secret, ctx_path);
      const Commitment c = with_file(c_path, [&](const KeyValues& kv) { return parse_commitment(kv, ck); });
      print(out, verdict_fields(audit(f.q, ck, c)));
    } else if (census_cmd->parsed()) {
      const CommitmentKey ck = load_key(ck_path);
      const std::optional<SecretKey> secret =
          secret_path.empty() ? std::nullopt : std::optional(load_secret(secret_path));
      const Factorization f = resolve_factorization(ck, secret, ctx_path);
      const std::string table = format_census(accepting_census(ck, f.q, threads));
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw Error(ErrorKind::invalid_argument, "cannot write '" + out_path + "'");
        file << table;
      }
      out << table;
    } else if (selftest->parsed()) {
      result = run_selftest(out) == 0 ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return result;
}

}  // namespace bgnlab::cli
