#include "nilmul/verify.hpp"

#include "nilmul/multiplier.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>

namespace nilmul {

using nlohmann::json;

namespace {

struct CentralLine {
  std::size_t m2_quotient = 0;
  std::size_t correction = 0;  // dim (I ∩ L^3) / [[I,L],L]
};

struct Profile {
  std::string slug;
  LieAlgebra algebra;
  SeriesReport series;
  std::size_t generators = 0;  // dim L/L^2
  std::size_t schur = 0;
  std::size_t m2 = 0;
  std::vector<std::string> m2_words;
  Subspace z1, z2;
  std::vector<CentralLine> lines;
};

std::size_t m2_of(const LieAlgebra& l) {
  if (l.dim() == 0) return 0;
  return nilpotent_multiplier(l, 2).dimension;
}

/// Basis lines of Z(L) and the line through the sum of the basis.
std::vector<Subspace> central_lines(const Subspace& center) {
  std::vector<Subspace> out;
  const std::size_t n = center.ambient_dim();
  std::vector<Rational> total(n);
  for (std::size_t r = 0; r < center.dim(); ++r) {
    Matrix row(0, n);
    row.append_row(center.basis().row(r));
    out.push_back(Subspace::span(row));
    for (std::size_t k = 0; k < n; ++k) total[k] += center.basis()(r, k);
  }
  if (center.dim() > 1) {
    Matrix row(0, n);
    row.append_row(total);
    out.push_back(Subspace::span(row));
  }
  return out;
}

Profile build_profile(std::string slug, LieAlgebra l, bool with_lines) {
  Profile p{std::move(slug), std::move(l), {}, 0, 0, 0, {}, Subspace(0), Subspace(0), {}};
  const LieAlgebra& alg = p.algebra;
  p.series = series(alg);
  p.generators = alg.dim() - p.series.lower(2).dim();
  auto a1 = analyze(alg, 1);
  auto a2 = analyze(alg, 2);
  p.schur = a1.multiplier.dimension;
  p.m2 = a2.multiplier.dimension;
  p.m2_words = a2.multiplier.words();
  p.z1 = std::move(a1.epicenter);
  p.z2 = std::move(a2.epicenter);
  if (with_lines) {
    const Subspace whole = Subspace::full(alg.dim());
    for (const Subspace& line : central_lines(p.series.upper(1))) {
      CentralLine c;
      c.m2_quotient = m2_of(quotient(alg, line));
      const Subspace inner = bracket_span(alg, bracket_span(alg, line, whole), whole);
      c.correction = quotient_dim(intersect(line, p.series.lower(3)), inner);
      p.lines.push_back(c);
    }
  }
  return p;
}

}  // namespace

std::vector<VerifyCase> verify_paper(const VerifyLimits& limits) {
  struct Job {
    std::string slug;
    std::function<LieAlgebra()> make;
    bool corpus;  // member of the bound / quotient-inequality corpus
  };
  std::vector<Job> jobs;
  for (std::size_t n = 1; n <= limits.max_abelian; ++n)
    jobs.push_back({"a" + std::to_string(n), [n] { return abelian(n); }, true});
  for (std::size_t m = 1; m <= limits.max_heisenberg; ++m)
    jobs.push_back({"h" + std::to_string(m), [m] { return heisenberg(m); }, true});
  for (std::size_t m = 1; m <= std::min<std::size_t>(2, limits.max_heisenberg); ++m)
    jobs.push_back({"h" + std::to_string(m) + "a1", [m] { return direct_sum(heisenberg(m), abelian(1)); }, true});

  const std::vector<std::pair<std::string, std::function<LieAlgebra()>>> parts = {
      {"a1", [] { return abelian(1); }},
      {"a2", [] { return abelian(2); }},
      {"a3", [] { return abelian(3); }},
      {"h1", [] { return heisenberg(1); }},
  };
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool have = false;
    for (const auto& j : jobs) have = have || j.slug == parts[i].first;
    if (!have) jobs.push_back({parts[i].first, parts[i].second, false});
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); ++j) {
      const std::string slug = parts[i].first + "+" + parts[j].first;
      pairs.emplace_back(parts[i].first, parts[j].first);
      auto mi = parts[i].second, mj = parts[j].second;
      jobs.push_back({slug, [mi, mj] { return direct_sum(mi(), mj()); }, false});
    }
  jobs.push_back({"h1/derived", [] {
                    const auto h = heisenberg(1);
                    return quotient(h, series(h).lower(2));
                  },
                  false});

  std::map<std::string, Profile> profiles;
  if (limits.parallel) {
    std::vector<std::future<Profile>> futures;
    for (const auto& job : jobs)
      futures.push_back(std::async(std::launch::async, [job] { return build_profile(job.slug, job.make(), job.corpus); }));
    for (auto& f : futures) {
      Profile p = f.get();
      profiles.emplace(p.slug, std::move(p));
    }
  } else {
    for (const auto& job : jobs) profiles.emplace(job.slug, build_profile(job.slug, job.make(), job.corpus));
  }

  std::vector<VerifyCase> cases;
  auto add = [&](std::string id, std::string description, std::string provenance, json expected, json computed) {
    cases.push_back({std::move(id), std::move(description), std::move(provenance), std::move(expected),
                     std::move(computed)});
  };

  // Hall basis and Witt counts
  {
    const auto basis = hall_basis(2, 4);
    const auto names = generator_names(2);
    std::vector<std::string> upper;
    std::map<std::size_t, std::uint64_t> strata;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      ++strata[basis[i].length];
      if (basis[i].length >= 3) upper.push_back(format_word(basis, i, names));
    }
    add("witt-d2-n3", "basic commutators of length 3 on two generators", "hall-enumeration", strata[3], witt(2, 3));
    add("witt-d2-n4", "basic commutators of length 4 on two generators", "listed-basis", 3, witt(2, 4));
    add("hall-d2-c4-upper", "Hall words of lengths 3 and 4 on {x, y}", "listed-basis",
        json::array({"[y,x,x]", "[y,x,y]", "[y,x,x,x]", "[y,x,x,y]", "[y,x,y,y]"}), upper);
  }

  for (std::size_t n = 1; n <= limits.max_abelian; ++n) {
    const Profile& p = profiles.at("a" + std::to_string(n));
    const auto ns = std::to_string(n);
    add("m2-abelian-n" + ns, "dim M^(2)(A(" + ns + ")) = n(n-1)(n+1)/3", "closed-form",
        abelian_m2(static_cast<std::int64_t>(n)), p.m2);
  }
  add("capable-abelian-n1", "A(1) is not capable", "known-result", false, profiles.at("a1").z1.is_zero());

  for (std::size_t m = 1; m <= limits.max_heisenberg; ++m) {
    const Profile& p = profiles.at("h" + std::to_string(m));
    const auto ms = std::to_string(m);
    const auto mi = static_cast<std::int64_t>(m);
    add("schur-heisenberg-m" + ms, "dim M(H(" + ms + "))", "closed-form", schur_heisenberg(mi), p.schur);
    add("m2-heisenberg-m" + ms, "dim M^(2)(H(" + ms + "))", "closed-form", heisenberg_m2(mi), p.m2);
    add("capable-heisenberg-m" + ms, "H(" + ms + ") is capable iff m = 1", "known-result", m == 1, p.z1.is_zero());
    add("two-capable-heisenberg-m" + ms, "H(" + ms + ") is 2-capable iff m = 1", "known-result", m == 1,
        p.z2.is_zero());
    if (m >= 2)
      add("epicenter-heisenberg-m" + ms, "Z*(H(" + ms + ")) = L^2 = Z(L)", "known-result", true,
          p.z1 == p.series.lower(2) && p.z1 == p.series.upper(1));
  }
  {
    const Profile& h1 = profiles.at("h1");
    add("m2-basis-heisenberg-m1", "Hall-word basis of M^(2)(H(1))", "listed-basis",
        json::array({"[y,x,x]", "[y,x,y]", "[y,x,x,x]", "[y,x,x,y]", "[y,x,y,y]"}), h1.m2_words);
    add("quotient-m2-heisenberg-m1", "dim M^(2)(H(1)/L^2) = dim M^(2)(A(2))", "closed-form", abelian_m2(2),
        profiles.at("h1/derived").m2);
    add("no-monomorphism-heisenberg-m1",
        "dim M^(2)(H(1)) > dim M^(2)(H(1)/L^2), so L^2 is not inside Z*_2 and Z*_2(H(1)) = 0", "cross-check", true,
        h1.m2 > profiles.at("h1/derived").m2 && h1.z2.is_zero());
  }

  for (std::size_t m = 1; m <= std::min<std::size_t>(2, limits.max_heisenberg); ++m) {
    const auto ms = std::to_string(m);
    const Profile& p = profiles.at("h" + ms + "a1");
    const Profile& h = profiles.at("h" + ms);
    const Profile& a = profiles.at("a1");
    const auto n = static_cast<std::int64_t>(p.algebra.dim());
    add("m2-derived-one-h" + ms + "a1", "dim M^(2)(H(" + ms + ")+A(1)) from the dim L^2 = 1 formula", "closed-form",
        derived_dim_one_m2(n, static_cast<std::int64_t>(m)), p.m2);
    add("direct-sum-h" + ms + "+a1", "dim M^(2)(H(" + ms + ")+A(1)) from the direct-sum formula", "cross-check",
        direct_sum_m2(static_cast<std::int64_t>(h.m2), static_cast<std::int64_t>(a.m2),
                      static_cast<std::int64_t>(h.generators), static_cast<std::int64_t>(a.generators)),
        p.m2);
    const auto cls = recognize_derived_dim_one(p.algebra);
    add("classify-h" + ms + "a1", "H(" + ms + ")+A(1) recognised as H(m)+A(n-2m-1)", "structural",
        json::array({m, 1}), json::array({cls.heisenberg_rank, cls.abelian_part}));
  }

  for (const auto& [x, y] : pairs) {
    const Profile& px = profiles.at(x);
    const Profile& py = profiles.at(y);
    const Profile& s = profiles.at(x + "+" + y);
    add("direct-sum-" + x + "+" + y, "dim M^(2)(" + px.algebra.name() + "+" + py.algebra.name() + ")", "cross-check",
        direct_sum_m2(static_cast<std::int64_t>(px.m2), static_cast<std::int64_t>(py.m2),
                      static_cast<std::int64_t>(px.generators), static_cast<std::int64_t>(py.generators)),
        s.m2);
  }

  for (const auto& job : jobs) {
    if (!job.corpus) continue;
    const Profile& p = profiles.at(job.slug);
    const auto b = make_bound_report(p.algebra.dim(), p.series.lower(2).dim(), p.series.lower(3).dim(), p.m2);
    add("bound-" + job.slug,
        "dim M^(2) + dim L^3 <= n(n-1)(n+1)/3 with equality iff abelian (" + p.algebra.name() + ")", "known-result",
        true, b.general_slack >= 0 && b.saturates_general() == b.abelian);
    if (b.refined)
      add("refined-bound-" + job.slug, "dim M^(2) within the dim L^2 refined bound (" + p.algebra.name() + ")",
          "known-result", true, *b.refined_slack >= 0);
    add("epicenter-nested-" + job.slug, "Z*(L) inside Z*_2(L), Z*_c(L) inside Z_c(L) (" + p.algebra.name() + ")",
        "structural", true,
        p.z2.contains(p.z1) && p.series.upper(1).contains(p.z1) && p.series.upper(2).contains(p.z2));
    for (std::size_t k = 0; k < p.lines.size(); ++k)
      add("quotient-inequality-" + job.slug + "-" + std::to_string(k),
          "dim M^(2)(L/I) <= dim M^(2)(L) + dim (I∩L^3)/[[I,L],L] for a central line I of " + p.algebra.name(),
          "known-result", true, p.lines[k].m2_quotient <= p.m2 + p.lines[k].correction);
  }
  {
    const Profile& h1 = profiles.at("h1");
    const auto b = make_bound_report(3, 1, 0, h1.m2);
    add("refined-equality-h1", "refined bound is attained by H(1)", "known-result", 0, *b.refined_slack);
  }

  std::sort(cases.begin(), cases.end(), [](const VerifyCase& a, const VerifyCase& b) { return a.id < b.id; });
  return cases;
}

json verify_to_json(const std::vector<VerifyCase>& cases) {
  json list = json::array();
  std::size_t passed = 0;
  for (const auto& c : cases) {
    passed += c.pass() ? 1 : 0;
    list.push_back({{"id", c.id},
                    {"description", c.description},
                    {"provenance", c.provenance},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"status", c.pass() ? "pass" : "fail"}});
  }
  return {{"cases", std::move(list)}, {"passed", passed}, {"failed", cases.size() - passed}};
}

}  // namespace nilmul
