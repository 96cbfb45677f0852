// Copyright 2026 The mathtext Authors.
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

#ifndef MATHTEXT_TESTS_SUPPORT_FIXTURES_H_
#define MATHTEXT_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mathtext/pipeline.h"

namespace mathtext::testing {

// Absolute path of a file under the source tree.
std::string SourcePath(const std::string& relative);

// A fresh empty directory under the system temp dir.
std::string TempDir(const std::string& tag);

TaggedCorpus WsjSample();

// General sample plus the math supplement, as the shipped models use.
TaggedCorpus FixtureTaggerCorpus();

std::vector<LabeledDocument> FixtureAbstracts();

// Tagger, lexicons, patterns and both classifiers trained with defaults on
// the fixture data. Built once per process.
const Pipeline& FixturePipeline();

// Writes the fixture models to `dir` in the on-disk layout.
void WriteFixtureModels(const std::string& dir);

// A random string with embedded TeX in all four delimiter styles, escaped
// dollars, UTF-8 text and stray placeholder-like words.
std::string RandomTexString(std::mt19937_64& rng);

struct ClassifierCorpus {
  FeatureIndex index;
  std::vector<TrainingExample> corpus;
};

// 40 documents: class A uses only feature "a", class B only "b".
ClassifierCorpus SeparableCorpus();

// At most 5 classes, 10 features and 20 documents.
ClassifierCorpus RandomNbCorpus(std::mt19937_64& rng);

}  // namespace mathtext::testing

#endif  // MATHTEXT_TESTS_SUPPORT_FIXTURES_H_
