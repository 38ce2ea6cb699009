/*
   Copyright 2026 The charpcartan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance suite: one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "charpcartan/cli.hpp"
#include "charpcartan/expr.hpp"
#include "charpcartan/selftest.hpp"

namespace {

using charpcartan::CriterionResult;

struct Captured {
  int code;
  std::string out;
};

Captured run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = charpcartan::cli::run(args, out, err);
  return {code, out.str()};
}

// Runs the installed binary in a child process and captures stdout.
Captured run_process(const std::string& cmdline) {
  std::string full = std::string(CHARPCARTAN_CLI_PATH) + " " + cmdline + " 2>/dev/null";
  Captured c{-1, {}};
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string random_bytes(std::mt19937_64& eng) {
  std::uniform_int_distribution<int> len(1, 48), byte(1, 255);
  std::string s(static_cast<std::size_t>(len(eng)), ' ');
  for (auto& ch : s) ch = static_cast<char>(byte(eng));
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

CriterionResult criterion_cli() {
  CriterionResult r{9, "CLI determinism, fuzzing, selftest --seed 42", true, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> notes;
  auto fail = [&](const std::string& why) {
    r.passed = false;
    notes.push_back(why);
  };

  const std::vector<std::string> battery{
      "cartier --p 3 --vars x:laurent --form 'x^-1*dx'",
      "cartier --p 5 --vars x,y --form 'x^4*dx + y^9*dy + x*dy + y*dx'",
      "curvature --p 3 --vars x,y --conn 'x*dy, dx; 0, y*dx'",
      "pcurvature --p 3 --vars x --conn 'x*dx' --D x",
      "pcurvature --p 5 --group aff1",
      "mc-check --p 7 --group ga",
      "jacobson-check --p 5 --v '1,2;3,4' --u '0,1;1,0'",
      "l1123-check --p 5 --algebra sl2 --v '1,0,2' --u '0,3,1'",
      "classify-gm --p 3 --N 2 --truncate 1",
      "classify-ga --p 3 --N 2 --D 9",
      "check-tuple --p 3 --vars x:laurent,y --omega 'x^-1*dx' --chi dy",
      "count --formula dormant --p 5 --g 3 --N 1",
      "count --formula elliptic --p 5 --N 3",
      "cartier --p 3 --vars x --form 'x*dx ^ dy'",
      "selftest --seed 42",
  };
  for (const auto& cmd : battery) {
    Captured a = run_process(cmd);
    Captured b = run_process(cmd);
    if (a.code < 0 || a.out.empty() || a.out != b.out || a.code != b.code) fail("nondeterministic: " + cmd);
    if (!nlohmann::json::accept(a.out)) fail("not JSON: " + cmd);
  }
  Captured example = run_process("cartier --p 3 --vars x:laurent --form 'x^-1*dx'");
  if (example.out != "{\"ok\":true,\"result\":{\"fixed_point\":true,\"form\":\"x^-1*dx\"}}\n") {
    fail("cartier example payload: " + example.out);
  }

  std::mt19937_64 eng(42);
  std::size_t argv_ok = 0;
  for (int k = 0; k < 10000; ++k) {
    Captured c = run_cli(split_ws(random_bytes(eng)));
    if (c.code == 2 && nlohmann::json::accept(c.out)) ++argv_ok;
  }
  if (argv_ok != 10000) fail("argv fuzz: " + std::to_string(10000 - argv_ok) + " inputs did not exit 2");

  std::size_t form_ok = 0;
  const charpcartan::PolyRing ring(charpcartan::Prime(3), charpcartan::parse_vars("x:laurent,y"));
  for (int k = 0; k < 10000; ++k) {
    std::string src = random_bytes(eng);
    bool rejected = false;
    try {
      charpcartan::parse_expression(src, ring);
    } catch (const charpcartan::Error&) {
      rejected = true;
    }
    Captured c = run_cli({"cartier", "--p", "3", "--vars", "x:laurent,y", "--form=" + src});
    bool ok = nlohmann::json::accept(c.out) && (c.code == 0 || c.code == 1 || c.code == 2);
    if (rejected) ok = ok && c.code == 2;
    if (ok) ++form_ok;
  }
  if (form_ok != 10000) fail("expression fuzz: " + std::to_string(10000 - form_ok) + " bad outcomes");

  Captured self = run_cli({"selftest", "--seed", "42"});
  if (self.code != 0) fail("selftest --seed 42 exited " + std::to_string(self.code));

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << battery.size() << " commands deterministic, " << argv_ok << "/10000 argv fuzz exit 2, " << form_ok
    << "/10000 expression fuzz consistent";
  for (const auto& n : notes) d << "; " << n;
  r.detail = d.str();
  return r;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  auto results = charpcartan::run_selftest(42);
  results.push_back(criterion_cli());
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool all = true;
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ("
              << std::fixed << std::setprecision(3) << r.seconds << " s)  " << r.detail << "\n";
    all = all && r.passed;
  }
  std::cout << "total " << std::fixed << std::setprecision(3) << total << " s: " << (all ? "PASS" : "FAIL") << "\n";
  return all ? 0 : 1;
}
