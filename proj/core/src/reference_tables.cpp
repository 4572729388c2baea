// Copyright 2026 The varcal Authors.
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

#include "varcal/reference_tables.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace varcal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Mean divergences per task, decoder setting and probe as published in the
// decoder comparison tables. Labels keep their original spelling.
constexpr std::array kRows = {
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-ancestral-val", "lexical-1", 0.075174},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "lexical-1", 0.114867},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "lexical-1", 0.098536},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-typical_02-val", "lexical-1", 0.217127},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-typical_095-val", "lexical-1", 0.098259},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "human_control", "lexical-1", 0.042863},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-ancestral-val", "syntactic-2", 0.089668},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "syntactic-2", 0.124259},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "syntactic-2", 0.108829},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-typical_02-val", "syntactic-2", 0.244697},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-typical_095-val", "syntactic-2", 0.108139},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "human_control", "syntactic-2", 0.050427},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-ancestral-val", "semantic", 0.044924},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "semantic", 0.056711},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "semantic", 0.051341},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-typical_02-val", "semantic", 0.096548},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "flanT5_large_finetuned-typical_095-val", "semantic", 0.051276},
    ReferenceRow{ReferenceTable::W1Self, "Simplification", "human_control", "semantic", 0.025631},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-ancestral", "lexical-1", 0.250246},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-nucleus_085", "lexical-1", 0.268903},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-nucleus_09", "lexical-1", 0.262719},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-temperature05", "lexical-1", 0.213019},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-temperature075", "lexical-1", 0.282174},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-top_k_30", "lexical-1", 0.255974},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-top_k_40", "lexical-1", 0.251440},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "human_control", "lexical-1", 0.043193},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-ancestral", "syntactic-2", 0.155366},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-nucleus_085", "syntactic-2", 0.170862},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-nucleus_09", "syntactic-2", 0.165579},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-temperature05", "syntactic-2", 0.159474},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-temperature075", "syntactic-2", 0.181173},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-top_k_30", "syntactic-2", 0.159928},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-top_k_40", "syntactic-2", 0.155916},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "human_control", "syntactic-2", 0.035402},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-ancestral", "semantic", 0.130312},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-nucleus_085", "semantic", 0.140748},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-nucleus_09", "semantic", 0.137961},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-temperature05", "semantic", 0.141920},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-temperature075", "semantic", 0.148178},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-top_k_30", "semantic", 0.133588},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "opus-top_k_40", "semantic", 0.131818},
    ReferenceRow{ReferenceTable::W1Self, "Translation", "human_control", "semantic", 0.027646},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-ancestral-test", "lexical-1", 0.074878},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "lexical-1", 0.089306},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "lexical-1", 0.082663},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-temperature05-test", "lexical-1", 0.158670},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-typical_02-test", "lexical-1", 0.089595},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "human_control", "lexical-1", 0.026115},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-ancestral-test", "syntactic-2", 0.107836},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "syntactic-2", 0.112113},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "syntactic-2", 0.112662},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-temperature05-test", "syntactic-2", 0.190448},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-typical_02-test", "syntactic-2", 0.097114},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "human_control", "syntactic-2", 0.030801},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-ancestral-test", "semantic", 0.095689},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "semantic", 0.101362},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "semantic", 0.098502},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-temperature05-test", "semantic", 0.142114},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "gpt2_large_finetuned-typical_02-test", "semantic", 0.110264},
    ReferenceRow{ReferenceTable::W1Self, "Story Generation", "human_control", "semantic", 0.050663},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "lexical-1", 0.094768},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "human_control", "lexical-1", kNaN},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "lexical-1", 0.091718},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "lexical-1", 0.091948},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "lexical-1", 0.091910},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "lexical-1", 0.093984},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "lexical-1", 0.100279},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "lexical-1", 0.094912},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "syntactic-2", 0.106077},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "human_control", "syntactic-2", kNaN},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "syntactic-2", 0.108866},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "syntactic-2", 0.106057},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "syntactic-2", 0.107674},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "syntactic-2", 0.107663},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "syntactic-2", 0.116369},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "syntactic-2", 0.108587},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "semantic", 0.112896},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "human_control", "semantic", kNaN},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "semantic", 0.112480},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "semantic", 0.111765},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "semantic", 0.111521},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "semantic", 0.113160},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "semantic", 0.113362},
    ReferenceRow{ReferenceTable::W1Self, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "semantic", 0.110345},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-ancestral-val", "lexical-1", -0.041574},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "lexical-1", -0.107347},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "lexical-1", -0.085751},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-typical_02-val", "lexical-1", -0.214236},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-typical_095-val", "lexical-1", -0.084748},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "human_control", "lexical-1", -0.004613},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-ancestral-val", "syntactic-2", -0.048417},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "syntactic-2", -0.111659},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "syntactic-2", -0.089422},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-typical_02-val", "syntactic-2", -0.240776},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-typical_095-val", "syntactic-2", -0.087786},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "human_control", "syntactic-2", -0.004535},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-ancestral-val", "semantic", -0.016843},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "semantic", -0.049492},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "semantic", -0.040255},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-typical_02-val", "semantic", -0.094252},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "flanT5_large_finetuned-typical_095-val", "semantic", -0.040386},
    ReferenceRow{ReferenceTable::MuSelf, "Simplification", "human_control", "semantic", -0.005045},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-ancestral", "lexical-1", -0.249243},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-nucleus_085", "lexical-1", -0.268126},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-nucleus_09", "lexical-1", -0.261954},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-temperature05", "lexical-1", -0.180041},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-temperature075", "lexical-1", -0.281996},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-top_k_30", "lexical-1", -0.255388},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-top_k_40", "lexical-1", -0.250243},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "human_control", "lexical-1", 0.023181},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-ancestral", "syntactic-2", -0.151919},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-nucleus_085", "syntactic-2", -0.169243},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-nucleus_09", "syntactic-2", -0.162130},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-temperature05", "syntactic-2", -0.152725},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-temperature075", "syntactic-2", -0.179065},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-top_k_30", "syntactic-2", -0.157629},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-top_k_40", "syntactic-2", -0.153329},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "human_control", "syntactic-2", 0.009030},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-ancestral", "semantic", -0.129037},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-nucleus_085", "semantic", -0.139889},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-nucleus_09", "semantic", -0.136995},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-temperature05", "semantic", -0.034734},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-temperature075", "semantic", -0.147533},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-top_k_30", "semantic", -0.132567},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "opus-top_k_40", "semantic", -0.130491},
    ReferenceRow{ReferenceTable::MuSelf, "Translation", "human_control", "semantic", 0.009674},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-ancestral-test", "lexical-1", -0.001277},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "lexical-1", -0.023124},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "lexical-1", -0.011460},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-temperature05-test", "lexical-1", -0.043398},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-typical_02-test", "lexical-1", -0.042259},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "human_control", "lexical-1", -0.000588},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-ancestral-test", "syntactic-2", 0.069409},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "syntactic-2", 0.065952},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "syntactic-2", 0.068751},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-temperature05-test", "syntactic-2", 0.136734},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-typical_02-test", "syntactic-2", 0.033082},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "human_control", "syntactic-2", -0.001439},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-ancestral-test", "semantic", 0.003763},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "semantic", -0.015119},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "semantic", -0.004399},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-temperature05-test", "semantic", -0.068208},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "gpt2_large_finetuned-typical_02-test", "semantic", -0.038362},
    ReferenceRow{ReferenceTable::MuSelf, "Story Generation", "human_control", "semantic", -0.000839},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "lexical-1", 0.059756},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "human_control", "lexical-1", kNaN},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "lexical-1", 0.039885},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "lexical-1", 0.051588},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "lexical-1", 0.049452},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "lexical-1", 0.055738},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "lexical-1", 0.028369},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "lexical-1", 0.051247},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "syntactic-2", 0.040850},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "human_control", "syntactic-2", kNaN},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "syntactic-2", 0.026282},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "syntactic-2", 0.034128},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "syntactic-2", 0.031613},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "syntactic-2", 0.036636},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "syntactic-2", 0.007331},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "syntactic-2", 0.035866},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "semantic", 0.064680},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "human_control", "semantic", kNaN},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "semantic", 0.045279},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "semantic", 0.055085},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "semantic", 0.052337},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "semantic", 0.058887},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "semantic", 0.016471},
    ReferenceRow{ReferenceTable::MuSelf, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "semantic", 0.054787},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-ancestral-val", "lexical-1", 0.047961},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "lexical-1", 0.059546},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "lexical-1", 0.054702},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-typical_02-val", "lexical-1", 0.068984},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-typical_095-val", "lexical-1", 0.054952},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "human_control", "lexical-1", 0.042863},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-ancestral-val", "syntactic-2", 0.056443},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "syntactic-2", 0.065849},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "syntactic-2", 0.061433},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-typical_02-val", "syntactic-2", 0.078297},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-typical_095-val", "syntactic-2", 0.061684},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "human_control", "syntactic-2", 0.050427},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-ancestral-val", "semantic", 0.027983},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "semantic", 0.030626},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "semantic", 0.029443},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-typical_02-val", "semantic", 0.036008},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "flanT5_large_finetuned-typical_095-val", "semantic", 0.029270},
    ReferenceRow{ReferenceTable::W1Cross, "Simplification", "human_control", "semantic", 0.025631},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-ancestral", "lexical-1", 0.067614},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-nucleus_085", "lexical-1", 0.069170},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-nucleus_09", "lexical-1", 0.068676},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-temperature05", "lexical-1", 0.125683},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-temperature075", "lexical-1", 0.070435},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-top_k_30", "lexical-1", 0.068002},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-top_k_40", "lexical-1", 0.066907},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "human_control", "lexical-1", 0.043193},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-ancestral", "syntactic-2", 0.055636},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-nucleus_085", "syntactic-2", 0.057639},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-nucleus_09", "syntactic-2", 0.056588},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-temperature05", "syntactic-2", 0.064878},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-temperature075", "syntactic-2", 0.058195},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-top_k_30", "syntactic-2", 0.056383},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-top_k_40", "syntactic-2", 0.055540},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "human_control", "syntactic-2", 0.035402},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-ancestral", "semantic", 0.043123},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-nucleus_085", "semantic", 0.043951},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-nucleus_09", "semantic", 0.043713},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-temperature05", "semantic", 0.112590},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-temperature075", "semantic", 0.045421},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-top_k_30", "semantic", 0.043264},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "opus-top_k_40", "semantic", 0.042813},
    ReferenceRow{ReferenceTable::W1Cross, "Translation", "human_control", "semantic", 0.027646},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-ancestral-test", "lexical-1", 0.052815},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "lexical-1", 0.052926},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "lexical-1", 0.053015},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-temperature05-test", "lexical-1", 0.087166},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-typical_02-test", "lexical-1", 0.050375},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "human_control", "lexical-1", 0.026115},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-ancestral-test", "syntactic-2", 0.082493},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "syntactic-2", 0.088013},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "syntactic-2", 0.085413},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-temperature05-test", "syntactic-2", 0.180557},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-typical_02-test", "syntactic-2", 0.078543},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "human_control", "syntactic-2", 0.030801},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-ancestral-test", "semantic", 0.078816},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "semantic", 0.077738},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "semantic", 0.078084},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-temperature05-test", "semantic", 0.087292},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "gpt2_large_finetuned-typical_02-test", "semantic", 0.078043},
    ReferenceRow{ReferenceTable::W1Cross, "Story Generation", "human_control", "semantic", 0.050663},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "lexical-1", 0.082540},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "human_control", "lexical-1", kNaN},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "lexical-1", 0.078856},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "lexical-1", 0.080944},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "lexical-1", 0.081368},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "lexical-1", 0.082693},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "lexical-1", 0.090923},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "lexical-1", 0.081366},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "syntactic-2", 0.085033},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "human_control", "syntactic-2", kNaN},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "syntactic-2", 0.085009},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "syntactic-2", 0.084188},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "syntactic-2", 0.084248},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "syntactic-2", 0.083804},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "syntactic-2", 0.088119},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "syntactic-2", 0.085461},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "semantic", 0.097410},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "human_control", "semantic", kNaN},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "semantic", 0.094412},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "semantic", 0.096555},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "semantic", 0.095628},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "semantic", 0.096752},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "semantic", 0.095108},
    ReferenceRow{ReferenceTable::W1Cross, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "semantic", 0.095468},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-ancestral-val", "lexical-1", -0.019180},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "lexical-1", -0.047746},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "lexical-1", -0.039108},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-typical_02-val", "lexical-1", -0.047960},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-typical_095-val", "lexical-1", -0.038222},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "human_control", "lexical-1", -0.004613},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-ancestral-val", "syntactic-2", -0.024071},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "syntactic-2", -0.050534},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "syntactic-2", -0.041670},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-typical_02-val", "syntactic-2", -0.050770},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-typical_095-val", "syntactic-2", -0.040591},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "human_control", "syntactic-2", -0.004535},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-ancestral-val", "semantic", -0.007191},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-nucleus_09-val", "semantic", -0.021733},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-nucleus_095-val", "semantic", -0.018084},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-typical_02-val", "semantic", -0.022718},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "flanT5_large_finetuned-typical_095-val", "semantic", -0.017714},
    ReferenceRow{ReferenceTable::MuCross, "Simplification", "human_control", "semantic", -0.005045},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-ancestral", "lexical-1", -0.031401},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-nucleus_085", "lexical-1", -0.032499},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-nucleus_09", "lexical-1", -0.032062},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-temperature05", "lexical-1", 0.060986},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-temperature075", "lexical-1", -0.028734},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-top_k_30", "lexical-1", -0.031515},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-top_k_40", "lexical-1", -0.031321},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "human_control", "lexical-1", 0.023181},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-ancestral", "syntactic-2", -0.010164},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-nucleus_085", "syntactic-2", -0.011306},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-nucleus_09", "syntactic-2", -0.010588},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-temperature05", "syntactic-2", 0.007351},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-temperature075", "syntactic-2", -0.009418},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-top_k_30", "syntactic-2", -0.010525},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-top_k_40", "syntactic-2", -0.010689},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "human_control", "syntactic-2", 0.009030},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-ancestral", "semantic", -0.014492},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-nucleus_085", "semantic", -0.015246},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-nucleus_09", "semantic", -0.015266},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-temperature05", "semantic", 0.076953},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-temperature075", "semantic", -0.013291},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-top_k_30", "semantic", -0.014714},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "opus-top_k_40", "semantic", -0.014507},
    ReferenceRow{ReferenceTable::MuCross, "Translation", "human_control", "semantic", 0.009674},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-ancestral-test", "lexical-1", 0.034652},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "lexical-1", 0.029568},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "lexical-1", 0.031654},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-temperature05-test", "lexical-1", 0.068008},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-typical_02-test", "lexical-1", 0.023071},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "human_control", "lexical-1", -0.000588},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-ancestral-test", "syntactic-2", 0.066966},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "syntactic-2", 0.073412},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "syntactic-2", 0.069038},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-temperature05-test", "syntactic-2", 0.175454},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-typical_02-test", "syntactic-2", 0.058097},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "human_control", "syntactic-2", -0.001439},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-ancestral-test", "semantic", 0.050337},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-nucleus_09-test", "semantic", 0.047109},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-nucleus_095-test", "semantic", 0.048778},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-temperature05-test", "semantic", 0.060529},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "gpt2_large_finetuned-typical_02-test", "semantic", 0.045444},
    ReferenceRow{ReferenceTable::MuCross, "Story Generation", "human_control", "semantic", -0.000839},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "lexical-1", 0.067089},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "human_control", "lexical-1", kNaN},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "lexical-1", 0.059751},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "lexical-1", 0.063929},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "lexical-1", 0.064058},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "lexical-1", 0.065997},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "lexical-1", 0.077755},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "lexical-1", 0.064922},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "syntactic-2", 0.050752},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "human_control", "syntactic-2", kNaN},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "syntactic-2", 0.045903},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "syntactic-2", 0.047880},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "syntactic-2", 0.046732},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "syntactic-2", 0.049299},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "syntactic-2", 0.052058},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "syntactic-2", 0.049841},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-ancestral-dev", "semantic", 0.078752},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "human_control", "semantic", kNaN},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-nucleus_09-dev", "semantic", 0.070942},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-nucleus_095-dev", "semantic", 0.075569},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-top_k_30-dev", "semantic", 0.073973},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-top_k_40-dev", "semantic", 0.076133},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-typical_02-dev", "semantic", 0.073281},
    ReferenceRow{ReferenceTable::MuCross, "Open-Domain Dialogue", "dialogpt_large-typical_095-dev", "semantic", 0.074061},
};

// "<model>-<decoder>[-<split>]" -> "<decoder>"
std::string_view decoder_segment(std::string_view label) {
  const auto first = label.find('-');
  if (first == std::string_view::npos) return label;
  auto rest = label.substr(first + 1);
  return rest.substr(0, rest.find('-'));
}

}  // namespace

std::span<const ReferenceRow> load_reference_tables() { return kRows; }

std::optional<double> reference_value(std::string_view task, std::string_view config,
                                      ProbeKind probe, ReferenceTable table) {
  const std::string probe_name = probe.name();
  auto matches = [&](auto&& label_matches) {
    std::optional<double> found;
    int hits = 0;
    for (const auto& row : kRows) {
      if (row.table == table && row.task == task && row.probe == probe_name &&
          label_matches(row.label)) {
        found = row.value;
        ++hits;
      }
    }
    return hits == 1 ? found : std::nullopt;
  };
  if (auto exact = matches([&](std::string_view l) { return l == config; })) return exact;
  return matches([&](std::string_view l) { return l != "human_control" && decoder_segment(l) == config; });
}

std::vector<std::string_view> reference_tasks() {
  std::vector<std::string_view> tasks;
  for (const auto& row : kRows) {
    if (std::find(tasks.begin(), tasks.end(), row.task) == tasks.end()) tasks.push_back(row.task);
  }
  return tasks;
}

}  // namespace varcal
