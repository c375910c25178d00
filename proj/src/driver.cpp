#include "driver.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "printer.hpp"

namespace hawk {

Report check_file(const SourceFile& file) {
  Report rep;
  for (const auto& th : file.theorems) {
    CheckReport r = check_proof(file.logic, th.sig, th.ctx, th.proof, th.goal);
    rep.items.push_back(ReportItem{th.name, r.accepted, r.message()});
    rep.ok = rep.ok && r.accepted;
  }
  std::ostringstream o;
  for (const auto& it : rep.items)
    o << it.name << ": " << it.detail << "\n";
  rep.text = o.str();
  return rep;
}

Report translate_file(const SourceFile& file) {
  Report rep;
  SourceFile out;
  out.logic = Logic::lhaw;
  for (const auto& th : file.theorems) {
    Judgment j{file.logic, th.sig, th.ctx, th.proof, th.goal};
    ReportItem item;
    item.name = th.name;
    try {
      TranslationUnit unit = translate_proof(j);
      CheckReport recheck = check_proof(unit.produced);
      if (recheck.accepted) {
        item.ok = true;
        item.detail = "translated and re-checked";
        out.theorems.push_back(TheoremDecl{th.name, unit.produced.sig, unit.produced.ctx,
                                           unit.produced.goal, unit.produced.proof});
      } else {
        // a rejected translation of an accepted source is a defect; dump the
        // provenance notes to make it diagnosable
        item.ok = false;
        std::ostringstream o;
        o << "defect: translated judgment rejected: " << recheck.message();
        for (const auto& n : unit.notes) o << "\n  note: " << n;
        item.detail = o.str();
      }
    } catch (const std::exception& e) {
      item.ok = false;
      item.detail = e.what();
    }
    rep.ok = rep.ok && item.ok;
    rep.items.push_back(std::move(item));
  }
  if (rep.ok) rep.text = print_source(out);
  return rep;
}

Report normalize_program_text(const std::string& text, bool with_trace) {
  Report rep;
  TermProgram prog = parse_term_program(text);  // ParseError propagates
  Signature empty;
  try {
    Sort s = infer_sort(empty, prog.term);
    std::ostringstream o;
    if (with_trace) {
      RewriteTrace trace;
      Term nf = normalize_term_traced(prog.term, trace);
      for (size_t i = 0; i < trace.size(); ++i) {
        o << i + 1 << ". " << trace[i].rule << " @";
        if (trace[i].path.empty()) o << " root";
        for (int k : trace[i].path) o << " " << k;
        o << ": " << show_term(trace[i].after) << "\n";
      }
      o << show_term(nf) << " : " << s.show() << "\n";
    } else {
      o << show_term(normalize_term(prog.term)) << " : " << s.show() << "\n";
    }
    rep.text = o.str();
    rep.items.push_back(ReportItem{"normalize", true, "normal form computed"});
  } catch (const SortError& e) {
    rep.ok = false;
    rep.items.push_back(ReportItem{"normalize", false, e.what()});
    rep.text = std::string("type error: ") + e.what() + "\n";
  }
  return rep;
}

Report conjecture_file(const SourceFile& file, uint64_t max_steps) {
  Report rep;
  ConjectureReport cj = run_conjecture(file, max_steps);
  for (const auto& inst : cj.instances) {
    bool ok = inst.status != "error";
    rep.items.push_back(ReportItem{inst.theorem + (inst.rule.empty() ? "" : "/" + inst.rule),
                                   ok, inst.status + (inst.detail.empty() ? "" : ": " + inst.detail)});
  }
  rep.ok = cj.errors == 0;
  rep.text = render_conjecture_report(cj);
  return rep;
}

namespace {

struct CorpusLine {
  std::string name;
  Logic logic = Logic::lhaw;
  bool check_ok = false;
  bool translate_ok = false;
  int64_t ms = 0;
  std::string detail;
};

CorpusLine run_term_item(const CorpusTermItem& item) {
  CorpusLine line;
  line.name = item.name;
  line.logic = Logic::lhaw;
  auto start = std::chrono::steady_clock::now();
  Signature empty;
  try {
    Sort s = infer_sort(empty, item.term);
    line.check_ok = (s == item.sort);
    if (!line.check_ok) line.detail = "sort mismatch";
    Proof pm = translate_term(empty, item.term);
    Formula goal = eqpm(item.sort, item.term, item.term);
    CheckReport rep = check_proof(Logic::lhaw, empty, Context{}, pm, goal);
    line.translate_ok = rep.accepted;
    if (!rep.accepted) line.detail = rep.message();
  } catch (const std::exception& e) {
    line.detail = e.what();
  }
  auto end = std::chrono::steady_clock::now();
  line.ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return line;
}

CorpusLine run_theorem_item(const CorpusTheoremItem& item) {
  CorpusLine line;
  line.name = item.name;
  line.logic = item.judgment.logic;
  auto start = std::chrono::steady_clock::now();
  try {
    CheckReport src = check_proof(item.judgment);
    line.check_ok = src.accepted;
    if (src.accepted) {
      TranslationUnit unit = translate_proof(item.judgment);
      CheckReport out = check_proof(unit.produced);
      line.translate_ok = out.accepted;
      if (!out.accepted) line.detail = "translated judgment rejected: " + out.message();
    } else {
      line.detail = src.message();
    }
  } catch (const std::exception& e) {
    line.detail = e.what();
  }
  auto end = std::chrono::steady_clock::now();
  line.ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return line;
}

}  // namespace

Report corpus_run(const std::string& filter) {
  const Corpus& corpus = bundled_corpus();
  std::vector<std::function<CorpusLine()>> tasks;
  auto matches = [&](const std::string& name) {
    return filter.empty() || name.find(filter) != std::string::npos;
  };
  for (const auto& item : corpus.terms)
    if (matches(item.name)) tasks.push_back([&item] { return run_term_item(item); });
  for (const auto& item : corpus.lhaw)
    if (matches(item.name)) tasks.push_back([&item] { return run_theorem_item(item); });
  for (const auto& item : corpus.lehaw)
    if (matches(item.name)) tasks.push_back([&item] { return run_theorem_item(item); });

  std::vector<CorpusLine> lines(tasks.size());
  std::atomic<size_t> next{0};
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
        lines[i] = tasks[i]();
    });
  }
  for (auto& t : pool) t.join();

  Report rep;
  std::ostringstream o;
  for (const auto& line : lines) {
    bool ok = line.check_ok && line.translate_ok;
    rep.ok = rep.ok && ok;
    o << line.name << "\t" << logic_name(line.logic) << "\tcheck=" << (line.check_ok ? "ok" : "fail")
      << "\ttranslate=" << (line.translate_ok ? "ok" : "fail") << "\tms=" << line.ms;
    if (!line.detail.empty()) o << "\t" << line.detail;
    o << "\n";
    rep.items.push_back(ReportItem{line.name, ok, line.detail});
  }
  rep.text = o.str();
  return rep;
}

}  // namespace hawk
