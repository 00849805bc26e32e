// Copyright 2026 The Conceptlink Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "conceptlink/eval.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "conceptlink/error.h"
#include "json.hpp"

namespace conceptlink {

namespace {

using SpanKey = std::tuple<size_t, size_t, std::string>;

double Ratio(uint64_t num, uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

void ComputeRates(EvalReport *report) {
  report->precision = Ratio(report->true_positives,
                            report->true_positives + report->false_positives);
  report->recall = Ratio(report->true_positives,
                         report->true_positives + report->false_negatives);
  double sum = report->precision + report->recall;
  report->f1 = sum == 0.0 ? 0.0 : 2.0 * report->precision * report->recall / sum;
  report->support = report->true_positives + report->false_negatives;
}

EvalReport Score(std::span<const AnnotatedDocument> gold,
                 std::span<const AnnotatedDocument> predicted) {
  // Gold spans per document; duplicates of a (span, cui) pair collapse.
  std::unordered_map<std::string, std::multiset<SpanKey>> open;
  for (const AnnotatedDocument &doc : gold) {
    auto &spans = open[doc.id];
    for (const Annotation &a : doc.annotations) {
      SpanKey key(a.start, a.end, a.cui);
      if (spans.find(key) == spans.end()) spans.insert(key);
    }
  }

  std::unordered_map<std::string, std::vector<const Annotation *>> by_doc;
  for (const AnnotatedDocument &doc : predicted) {
    if (open.find(doc.id) == open.end()) {
      throw DomainError("prediction for unknown document id: " + doc.id);
    }
    auto &list = by_doc[doc.id];
    for (const Annotation &a : doc.annotations) list.push_back(&a);
  }

  EvalReport report;
  for (auto &[id, list] : by_doc) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Annotation *a, const Annotation *b) {
                       return a->start < b->start;
                     });
    auto &spans = open[id];
    for (const Annotation *a : list) {
      auto it = spans.find(SpanKey(a->start, a->end, a->cui));
      if (it != spans.end()) {
        spans.erase(it);
        ++report.true_positives;
        ++report.per_cui[a->cui].true_positives;
      } else {
        ++report.false_positives;
        ++report.per_cui[a->cui].false_positives;
      }
    }
  }
  for (const auto &[id, spans] : open) {
    for (const SpanKey &key : spans) {
      ++report.false_negatives;
      ++report.per_cui[std::get<2>(key)].false_negatives;
    }
  }
  ComputeRates(&report);
  return report;
}

std::string EvalReport::ToJson() const {
  nlohmann::ordered_json out;
  out["true_positives"] = true_positives;
  out["false_positives"] = false_positives;
  out["false_negatives"] = false_negatives;
  out["precision"] = precision;
  out["recall"] = recall;
  out["f1"] = f1;
  out["support"] = support;
  nlohmann::ordered_json cuis = nlohmann::ordered_json::object();
  for (const auto &[cui, counts] : per_cui) {
    cuis[cui] = {{"true_positives", counts.true_positives},
                 {"false_positives", counts.false_positives},
                 {"false_negatives", counts.false_negatives}};
  }
  out["per_cui"] = cuis;
  return out.dump(2);
}

std::string EvalReport::ToTable() const {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %8s %8s %8s\n", "", "P", "R", "F1");
  out << line;
  std::snprintf(line, sizeof(line), "%-12s %8.3f %8.3f %8.3f\n", "overall",
                precision, recall, f1);
  out << line;
  std::snprintf(line, sizeof(line), "TP=%llu FP=%llu FN=%llu support=%llu\n",
                static_cast<unsigned long long>(true_positives),
                static_cast<unsigned long long>(false_positives),
                static_cast<unsigned long long>(false_negatives),
                static_cast<unsigned long long>(support));
  out << line;
  return out.str();
}

}  // namespace conceptlink
