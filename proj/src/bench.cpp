#include "typik/bench.hpp"

#include <chrono>
#include <cstdio>

#include "typik/error.hpp"
#include "typik/minimal.hpp"

namespace typik {

std::string primed(const std::string& name, int times) { return name + std::string(times, '\''); }

namespace {

struct Renamer {
  int times;
  bool concepts;
  bool roles;

  IndividualName operator()(const IndividualName& a) const { return IndividualName(primed(a.str(), times)); }
  RoleName operator()(const RoleName& r) const { return roles ? RoleName(primed(r.str(), times)) : r; }
  ConceptName operator()(const ConceptName& c) const {
    return concepts ? ConceptName(primed(c.str(), times)) : c;
  }

  Concept operator()(const Concept& c) const {
    using K = Concept::Kind;
    switch (c.kind()) {
      case K::Top:
      case K::Bot:
        return c;
      case K::Atom:
        return Concept::atom((*this)(c.name()));
      case K::Nominal:
        return Concept::nominal((*this)(c.individual()));
      case K::Conj:
        return Concept::conj((*this)(c.left()), (*this)(c.right()));
      case K::Exists:
        return Concept::exists((*this)(c.role()), (*this)(c.filler()));
      case K::Self:
        return Concept::self((*this)(c.role()));
      case K::Typ:
        return Concept::typ((*this)(c.argument()));
    }
    return c;
  }

  Assertion operator()(const Assertion& a) const {
    if (const auto* c = std::get_if<ConceptAssertion>(&a)) {
      return ConceptAssertion{(*this)(c->description), (*this)(c->individual)};
    }
    const auto& r = std::get<RoleAssertion>(a);
    return RoleAssertion{(*this)(r.role), (*this)(r.subject), (*this)(r.object)};
  }

  RoleAxiom operator()(const RoleAxiom& a) const {
    return std::visit(
        [&](const auto& x) -> RoleAxiom {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, RoleInclusion>) {
            return RoleInclusion{(*this)(x.sub), (*this)(x.super)};
          } else if constexpr (std::is_same_v<T, RoleChain>) {
            return RoleChain{(*this)(x.first), (*this)(x.second), (*this)(x.super)};
          } else if constexpr (std::is_same_v<T, RoleConj>) {
            return RoleConj{(*this)(x.first), (*this)(x.second), (*this)(x.super)};
          } else if constexpr (std::is_same_v<T, ConceptProductLhs>) {
            return ConceptProductLhs{(*this)(x.first), (*this)(x.second), (*this)(x.super)};
          } else {
            return ConceptProductRhs{(*this)(x.sub), (*this)(x.first), (*this)(x.second)};
          }
        },
        a);
  }
};

// Individuals mentioned by an assertion, including nominals inside its concept.
void collect_individuals(const Concept& c, std::vector<IndividualName>& out) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Nominal:
      out.push_back(c.individual());
      break;
    case K::Conj:
      collect_individuals(c.left(), out);
      collect_individuals(c.right(), out);
      break;
    case K::Exists:
      collect_individuals(c.filler(), out);
      break;
    case K::Typ:
      collect_individuals(c.argument(), out);
      break;
    default:
      break;
  }
}

}  // namespace

KnowledgeBase replicate_abox(const KnowledgeBase& kb, int k) {
  KnowledgeBase out = kb;
  for (int r = 1; r < k; ++r) {
    Renamer rename{r, false, false};
    for (const auto& a : kb.abox) {
      Assertion copy = rename(a);
      std::vector<IndividualName> names;
      if (const auto* c = std::get_if<ConceptAssertion>(&copy)) {
        names.push_back(c->individual);
        collect_individuals(c->description, names);
      } else {
        const auto& ra = std::get<RoleAssertion>(copy);
        names.push_back(ra.subject);
        names.push_back(ra.object);
      }
      for (const auto& n : names) out.signature.add(n);
      out.abox.push_back(std::move(copy));
    }
  }
  return out;
}

KnowledgeBase replicate_kb(const KnowledgeBase& kb, int k) {
  KnowledgeBase out = kb;
  for (int r = 1; r < k; ++r) {
    Renamer rename{r, true, true};
    for (const auto& c : kb.signature.concepts()) out.signature.add(rename(c));
    for (const auto& x : kb.signature.roles()) out.signature.add(rename(x));
    for (const auto& a : kb.signature.individuals()) out.signature.add(rename(a));
    for (const auto& ax : kb.tbox) out.tbox.push_back({rename(ax.lhs), rename(ax.rhs)});
    for (const auto& ax : kb.rbox) out.rbox.push_back(rename(ax));
    for (const auto& ax : kb.abox) out.abox.push_back(rename(ax));
  }
  return out;
}

std::string row_label(BenchDimension d) {
  return d == BenchDimension::ABox ? "Replication of ABox" : "Replication of KB";
}

namespace {

std::string format_seconds(const BenchCell& c) {
  if (!c.seconds) return "budget";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *c.seconds);
  return buf;
}

}  // namespace

std::string BenchTable::to_text() const {
  const int label_width = 22;
  const int cell_width = 10;
  auto pad_left = [](std::string s, int w) {
    return std::string(std::max(0, w - static_cast<int>(s.size())), ' ') + s;
  };
  std::string out = std::string(label_width, ' ');
  for (int m : multipliers) out += pad_left(std::to_string(m) + "x", cell_width);
  out += "\n";
  for (const auto& row : rows) {
    std::string label = row_label(row.dimension);
    out += label + std::string(label_width - label.size(), ' ');
    for (const auto& c : row.cells) out += pad_left(format_seconds(c), cell_width);
    out += "\n";
  }
  return out;
}

nlohmann::json BenchTable::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : row.cells) {
      cells.push_back({{"multiplier", c.multiplier},
                       {"seconds", c.seconds ? nlohmann::json(*c.seconds) : nlohmann::json(nullptr)},
                       {"queries", c.queries},
                       {"entailed", c.entailed}});
    }
    rows_json.push_back({{"row", row_label(row.dimension)}, {"cells", cells}});
  }
  return {{"multipliers", multipliers}, {"rows", rows_json}, {"unit", "seconds"}};
}

BenchTable run_bench(const KnowledgeBase& kb, const std::vector<Query>& queries,
                     const std::vector<BenchDimension>& dimensions,
                     const std::vector<int>& multipliers, Limits per_cell) {
  BenchTable table;
  table.multipliers = multipliers;
  for (auto d : dimensions) {
    BenchRow row{d, {}};
    for (int m : multipliers) {
      BenchCell cell{m, std::nullopt, queries.size(), 0};
      auto start = std::chrono::steady_clock::now();
      try {
        KnowledgeBase replicated = d == BenchDimension::ABox ? replicate_abox(kb, m) : replicate_kb(kb, m);
        ReasonerOptions options;
        options.limits = per_cell;
        Reasoner reasoner(replicated, options);
        if (queries.empty()) {
          auto& ctx = reasoner.context(std::nullopt);
          ctx.engine.set_budget(std::make_shared<Budget>(per_cell));
          auto sat = satisfiable_concepts(ctx.engine);
          abox_minimal_front(ctx.engine, sat, t_minimal_front(ctx.engine, sat));
        }
        Limits remaining = per_cell;
        for (const auto& q : queries) {
          if (per_cell.seconds > 0) {
            double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            remaining.seconds = per_cell.seconds - used;
            if (remaining.seconds <= 0) throw BudgetExceeded("cell budget exhausted");
          }
          reasoner.options().limits = remaining;
          if (reasoner.entails(q, Mode::TMinABox).answer == Answer::Entailed) ++cell.entailed;
        }
        cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      } catch (const BudgetExceeded&) {
        cell.seconds.reset();
      } catch (const NoModel&) {
        cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      } catch (const NoTCompleteModel&) {
        cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
      row.cells.push_back(cell);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace typik
