#include "tt/driver.hpp"

#include <fstream>
#include <sstream>

#include "tt/nbe.hpp"
#include "tt/value.hpp"

namespace tt {

namespace {

const char* verb_name(DeclKind k) {
  switch (k) {
    case DeclKind::Assume:
      return "assume";
    case DeclKind::Define:
      return "define";
    case DeclKind::Check:
      return "check";
    case DeclKind::Normalize:
      return "normalize";
    case DeclKind::Infer:
      return "infer";
  }
  return "?";
}

}  // namespace

Session::Session(const RunConfig& cfg) : cfg_(cfg) {
  mode_.allow_star = cfg.allow_star;
  kernel_config().proof_relevant = cfg.proof_relevant;
  kernel_config().depth_limit = cfg.depth_limit;
}

std::vector<std::string> Session::scope_names() const {
  return std::vector<std::string>(names_.rbegin(), names_.rend());
}

DeclResult Session::process(const Decl& d, std::size_t index) {
  DeclResult r;
  r.index = index;
  r.verb = d.kind;
  r.ctx = ctx_;
  try {
    switch (d.kind) {
      case DeclKind::Assume: {
        TermPtr a = elaborate(d.type, scope_names(), defs_, mode_.allow_star);
        check_type(ctx_, a, mode_);
        r.type = a;
        r.type_normal = nbe_type(ctx_, a);
        r.payload = print_term(r.type_normal, names_);
        r.accepted = true;
        ctx_ = ctx_extend(ctx_, a);
        names_.push_back(d.name);
        break;
      }
      case DeclKind::Define: {
        TermPtr a = elaborate(d.type, scope_names(), defs_, mode_.allow_star);
        check_type(ctx_, a, mode_);
        TermPtr vt = nbe_type(ctx_, a);
        TermPtr t = elaborate(d.term, scope_names(), defs_, mode_.allow_star);
        check_term(ctx_, vt, t, mode_);
        defs_[d.name] = DefEntry{t, ctx_.size()};
        r.type = a;
        r.type_normal = vt;
        r.term = t;
        r.payload = print_term(vt, names_);
        r.accepted = true;
        break;
      }
      case DeclKind::Check:
      case DeclKind::Normalize: {
        TermPtr a = elaborate(d.type, scope_names(), defs_, mode_.allow_star);
        check_type(ctx_, a, mode_);
        TermPtr vt = nbe_type(ctx_, a);
        TermPtr t = elaborate(d.term, scope_names(), defs_, mode_.allow_star);
        check_term(ctx_, vt, t, mode_);
        r.type = a;
        r.type_normal = vt;
        r.term = t;
        r.accepted = true;
        bool want_normal = d.kind == DeclKind::Normalize ||
                           cfg_.command == Command::Normalize;
        if (want_normal) {
          r.normal = nbe_term(ctx_, a, t);
          r.payload = print_term(r.normal, names_);
        } else if (cfg_.command == Command::Infer && is_neutral(t)) {
          r.payload = print_term(infer_type(ctx_, t, mode_), names_);
        } else {
          r.payload = print_term(vt, names_);
        }
        break;
      }
      case DeclKind::Infer: {
        TermPtr t = elaborate(d.term, scope_names(), defs_, mode_.allow_star);
        TermPtr ty = infer_type(ctx_, t, mode_);
        r.term = t;
        r.type_normal = ty;
        r.payload = print_term(ty, names_);
        r.accepted = true;
        break;
      }
    }
  } catch (const TypeError& e) {
    r.accepted = false;
    r.payload = diag_kind_name(e.diag.kind);
    r.detail = e.diag.render();
  } catch (const ElabError& e) {
    r.accepted = false;
    r.payload = "UnboundName";
    r.detail = e.what();
  } catch (const KernelError& e) {
    r.accepted = false;
    r.payload = "KernelError";
    r.detail = e.what();
  }
  if (!r.accepted &&
      (d.kind == DeclKind::Assume || d.kind == DeclKind::Define)) {
    stopped_ = true;
  }
  return r;
}

RunResult run_text(const std::string& text, const RunConfig& cfg) {
  RunResult res;
  DeclFile file;
  try {
    file = parse(text);
  } catch (const ParseError& e) {
    res.parse_ok = false;
    res.exit_code = 2;
    res.output = std::string(e.what()) + "\n";
    return res;
  }
  Session session(cfg);
  std::ostringstream out;
  bool any_rejected = false;
  for (std::size_t i = 0; i < file.decls.size(); ++i) {
    const Decl& d = file.decls[i];
    DeclResult r = session.process(d, i);
    if (cfg.machine) {
      out << r.index << '\t' << verb_name(r.verb) << '\t'
          << (r.accepted ? "ACCEPT" : "REJECT") << '\t' << r.payload << '\n';
    } else {
      out << "[" << r.index << "] " << verb_name(r.verb) << " ";
      if (r.accepted) {
        out << "ACCEPT " << r.payload << '\n';
      } else {
        out << "REJECT " << r.payload << '\n';
        if (!r.detail.empty()) out << "    " << r.detail << '\n';
      }
    }
    if (!r.accepted) any_rejected = true;
    res.decls.push_back(std::move(r));
    if (session.stopped()) {
      if (!cfg.machine) {
        out << "stopped: context declaration rejected\n";
      }
      break;
    }
  }
  res.exit_code = any_rejected ? 1 : 0;
  res.output = out.str();
  return res;
}

RunResult run(const RunConfig& cfg) {
  std::ifstream in(cfg.input_path, std::ios::binary);
  if (!in) {
    RunResult res;
    res.parse_ok = false;
    res.exit_code = 2;
    res.output = "cannot read " + cfg.input_path + "\n";
    return res;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_text(buf.str(), cfg);
}

}  // namespace tt
