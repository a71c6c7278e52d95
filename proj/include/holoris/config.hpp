// SPDX-License-Identifier: Apache-2.0
//
// holoris - RIS-aided holographic MIMO link design library
// Copyright (C) 2026 The holoris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef holoris_config_H
#define holoris_config_H

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holoris
{
    // Malformed or invalid configuration; what() reads "<source>:<line>: [section] key: message"
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(const std::string &source, int line, const std::string &field, const std::string &message);

        int line() const { return line_; }
        const std::string &field() const { return field_; }

    private:
        int line_;
        std::string field_;
    };

    // Flat INI-style key-value document
    //
    //     # comment
    //     [section]
    //     key = value   ; trailing comments start with '#' or ';'
    //
    // Keys are unique per section. Every lookup marks the key as consumed so that unknown keys
    // can be reported with their line numbers.
    class KeyValueConfig
    {
    public:
        static KeyValueConfig parse(std::istream &in, std::string source = "<input>");
        static KeyValueConfig load(const std::string &path);

        bool has(const std::string &section, const std::string &key) const;
        std::optional<std::string> get(const std::string &section, const std::string &key) const;

        std::string get_string(const std::string &section, const std::string &key, const std::string &fallback) const;
        double get_double(const std::string &section, const std::string &key, double fallback) const;
        long long get_int(const std::string &section, const std::string &key, long long fallback) const;
        unsigned long long get_uint(const std::string &section, const std::string &key, unsigned long long fallback) const;
        std::vector<std::string> get_list(const std::string &section, const std::string &key) const;

        // Throws ConfigError for the first key never looked up
        void reject_unused() const;

        // ConfigError located at the given key (line 0 if the key is absent)
        [[noreturn]] void fail(const std::string &section, const std::string &key, const std::string &message) const;

        const std::string &source() const { return source_; }

    private:
        struct Entry
        {
            std::string value;
            int line = 0;
            mutable bool used = false;
        };
        std::string source_;
        std::map<std::pair<std::string, std::string>, Entry> entries_;
    };
}

#endif
