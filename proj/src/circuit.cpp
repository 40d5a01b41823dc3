// Copyright 2026 The cavqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cavqft/circuit.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "cavqft/errors.hpp"

namespace cavqft {

std::vector<GateOp> swap_from_cr1(int photon) {
    if (photon < 1) throw InvalidArgument("photon index must be >= 1");
    std::vector<GateOp> seq;
    for (int rep = 0; rep < 3; ++rep) {
        seq.push_back(GateOp::controlled_phase(1, photon));
        seq.push_back(GateOp::hadamard_pair(photon));
    }
    return seq;
}

namespace {

void push_idle(std::vector<GateOp>& gates, int cycles) {
    if (cycles <= 0) return;
    if (!gates.empty() && gates.back().kind == GateKind::Idle) {
        gates.back().cycles += cycles;
        return;
    }
    gates.push_back(GateOp::idle(cycles));
}

}  // namespace

CircuitProgram build_qft_program(int n, int cutoff, ProgramOptions options) {
    if (n < 1) throw InvalidArgument("QFT needs at least one photon");
    if (cutoff < 1) throw InvalidArgument("cutoff K must be >= 1");
    CircuitProgram program{n, cutoff, {}};
    auto& gates = program.gates;
    for (int i = 1; i <= n; ++i) {
        if (options.swap_form == SwapForm::Reflections) {
            auto swap = swap_from_cr1(i);
            swap.back() = GateOp::hadamard_photon(i);
            gates.insert(gates.end(), swap.begin(), swap.end());
        } else {
            gates.push_back(GateOp::swap(i));
            gates.push_back(GateOp::hadamard_atom());
        }
        if (options.idle_slots) push_idle(gates, 1);
        for (int j = i + 1; j <= n; ++j) {
            const int k = j - i + 1;
            if (k <= cutoff) gates.push_back(GateOp::controlled_phase(k, j));
            if (options.idle_slots) push_idle(gates, 1);
        }
        if (options.idle_slots) push_idle(gates, i - 1);
    }
    return program;
}

void validate_program(const CircuitProgram& program) {
    if (program.arity < 0) throw InvalidArgument("negative program arity");
    for (const auto& gate : program.gates) {
        switch (gate.kind) {
            case GateKind::HadamardAtom:
                break;
            case GateKind::Idle:
                if (gate.cycles < 0) throw InvalidArgument("negative idle length");
                break;
            case GateKind::ControlledPhase:
                if (gate.k < 1) throw InvalidArgument("CR_k needs k >= 1");
                if (gate.k > program.cutoff) {
                    throw InvalidArgument("CR_" + std::to_string(gate.k) + " exceeds cutoff K=" +
                                          std::to_string(program.cutoff));
                }
                [[fallthrough]];
            default:
                if (gate.photon < 1 || gate.photon > program.arity) {
                    throw ArityMismatch("gate '" + to_text(gate) + "' addresses photon outside 1.." +
                                        std::to_string(program.arity));
                }
        }
    }
}

std::string to_text(const GateOp& gate) {
    const std::string p = "p" + std::to_string(gate.photon);
    switch (gate.kind) {
        case GateKind::HadamardAtom:
            return "H a";
        case GateKind::HadamardPhoton:
            return "H " + p;
        case GateKind::HadamardPair:
            return "HH " + p;
        case GateKind::ControlledPhase:
            return "CR " + std::to_string(gate.k) + " " + p;
        case GateKind::Swap:
            return "SWAP " + p;
        case GateKind::PhaseFix: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", gate.angle);
            return std::string("PHASEFIX ") + buf + " " + p;
        }
        case GateKind::Idle:
            return "IDLE " + std::to_string(gate.cycles);
    }
    return {};
}

std::string to_text(const CircuitProgram& program) {
    std::string out = "QFT n=" + std::to_string(program.arity) +
                      " K=" + std::to_string(program.cutoff) + "\n";
    for (const auto& gate : program.gates) {
        out += to_text(gate);
        out += '\n';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GateOp& gate) { return os << to_text(gate); }

namespace {

int parse_int(std::string_view token, std::size_t line_no) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                         std::string(token) + "'");
    }
    return value;
}

int parse_photon(std::string_view token, std::size_t line_no) {
    if (token.size() < 2 || token[0] != 'p') {
        throw ParseError("line " + std::to_string(line_no) + ": expected photon 'p<j>', got '" +
                         std::string(token) + "'");
    }
    return parse_int(token.substr(1), line_no);
}

}  // namespace

CircuitProgram parse_program(std::string_view text) {
    CircuitProgram program;
    bool have_header = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        auto expect = [&](std::size_t count) {
            if (tok.size() != count) {
                throw ParseError("line " + std::to_string(line_no) + ": '" + tok[0] + "' takes " +
                                 std::to_string(count - 1) + " operand(s)");
            }
        };
        const std::string& op = tok[0];
        if (op == "QFT") {
            expect(3);
            if (tok[1].rfind("n=", 0) != 0 || tok[2].rfind("K=", 0) != 0) {
                throw ParseError("line " + std::to_string(line_no) + ": malformed header");
            }
            program.arity = parse_int(std::string_view(tok[1]).substr(2), line_no);
            program.cutoff = parse_int(std::string_view(tok[2]).substr(2), line_no);
            have_header = true;
        } else if (op == "H") {
            expect(2);
            if (tok[1] == "a") {
                program.gates.push_back(GateOp::hadamard_atom());
            } else {
                program.gates.push_back(GateOp::hadamard_photon(parse_photon(tok[1], line_no)));
            }
        } else if (op == "HH") {
            expect(2);
            program.gates.push_back(GateOp::hadamard_pair(parse_photon(tok[1], line_no)));
        } else if (op == "CR") {
            expect(3);
            program.gates.push_back(GateOp::controlled_phase(parse_int(tok[1], line_no),
                                                             parse_photon(tok[2], line_no)));
        } else if (op == "SWAP") {
            expect(2);
            program.gates.push_back(GateOp::swap(parse_photon(tok[1], line_no)));
        } else if (op == "PHASEFIX") {
            expect(3);
            double angle = 0.0;
            try {
                std::size_t used = 0;
                angle = std::stod(tok[1], &used);
                if (used != tok[1].size()) throw std::invalid_argument(tok[1]);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad angle '" + tok[1] + "'");
            }
            program.gates.push_back(GateOp::phase_fix(angle, parse_photon(tok[2], line_no)));
        } else if (op == "IDLE") {
            expect(2);
            program.gates.push_back(GateOp::idle(parse_int(tok[1], line_no)));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown gate '" + op + "'");
        }
    }
    if (!have_header) {
        // Headerless text: infer the smallest consistent arity and cutoff.
        for (const auto& g : program.gates) {
            program.arity = std::max(program.arity, g.photon);
            program.cutoff = std::max(program.cutoff, g.k);
        }
    }
    validate_program(program);
    return program;
}

}  // namespace cavqft
