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

#include "holoris/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace holoris
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::string strip_comment(const std::string &s)
        {
            const auto pos = s.find_first_of("#;");
            return pos == std::string::npos ? s : s.substr(0, pos);
        }

        std::string field_name(const std::string &section, const std::string &key)
        {
            return "[" + section + "] " + key;
        }
    }

    ConfigError::ConfigError(const std::string &source, int line, const std::string &field, const std::string &message)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + (field.empty() ? "" : field + ": ") + message),
          line_(line), field_(field)
    {
    }

    KeyValueConfig KeyValueConfig::parse(std::istream &in, std::string source)
    {
        KeyValueConfig cfg;
        cfg.source_ = std::move(source);
        std::string section, raw;
        int line = 0;
        while (std::getline(in, raw))
        {
            ++line;
            const std::string text = trim(strip_comment(raw));
            if (text.empty())
                continue;
            if (text.front() == '[')
            {
                if (text.back() != ']' || text.size() < 3)
                    throw ConfigError(cfg.source_, line, "", "malformed section header '" + text + "'");
                section = trim(text.substr(1, text.size() - 2));
                continue;
            }
            const auto eq = text.find('=');
            if (eq == std::string::npos)
                throw ConfigError(cfg.source_, line, "", "expected 'key = value', got '" + text + "'");
            const std::string key = trim(text.substr(0, eq));
            const std::string value = trim(text.substr(eq + 1));
            if (key.empty())
                throw ConfigError(cfg.source_, line, "", "empty key");
            if (section.empty())
                throw ConfigError(cfg.source_, line, key, "key outside of any [section]");
            auto [it, inserted] = cfg.entries_.try_emplace({section, key}, Entry{value, line});
            if (!inserted)
                throw ConfigError(cfg.source_, line, field_name(section, key),
                                  "duplicate key (first set on line " + std::to_string(it->second.line) + ")");
        }
        return cfg;
    }

    KeyValueConfig KeyValueConfig::load(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError(path, 0, "", "cannot open configuration file");
        return parse(in, path);
    }

    bool KeyValueConfig::has(const std::string &section, const std::string &key) const
    {
        return entries_.count({section, key}) > 0;
    }

    std::optional<std::string> KeyValueConfig::get(const std::string &section, const std::string &key) const
    {
        const auto it = entries_.find({section, key});
        if (it == entries_.end())
            return std::nullopt;
        it->second.used = true;
        return it->second.value;
    }

    void KeyValueConfig::fail(const std::string &section, const std::string &key, const std::string &message) const
    {
        const auto it = entries_.find({section, key});
        throw ConfigError(source_, it == entries_.end() ? 0 : it->second.line, field_name(section, key), message);
    }

    std::string KeyValueConfig::get_string(const std::string &section, const std::string &key,
                                           const std::string &fallback) const
    {
        return get(section, key).value_or(fallback);
    }

    double KeyValueConfig::get_double(const std::string &section, const std::string &key, double fallback) const
    {
        const auto v = get(section, key);
        if (!v)
            return fallback;
        std::istringstream ss(*v);
        ss.imbue(std::locale::classic());
        double out = 0;
        ss >> out;
        if (!ss || !(ss >> std::ws).eof())
            fail(section, key, "expected a number, got '" + *v + "'");
        return out;
    }

    long long KeyValueConfig::get_int(const std::string &section, const std::string &key, long long fallback) const
    {
        const auto v = get(section, key);
        if (!v)
            return fallback;
        long long out = 0;
        const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
        if (ec != std::errc() || ptr != v->data() + v->size())
            fail(section, key, "expected an integer, got '" + *v + "'");
        return out;
    }

    unsigned long long KeyValueConfig::get_uint(const std::string &section, const std::string &key,
                                                unsigned long long fallback) const
    {
        const auto v = get(section, key);
        if (!v)
            return fallback;
        unsigned long long out = 0;
        const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
        if (ec != std::errc() || ptr != v->data() + v->size())
            fail(section, key, "expected a non-negative integer, got '" + *v + "'");
        return out;
    }

    std::vector<std::string> KeyValueConfig::get_list(const std::string &section, const std::string &key) const
    {
        std::vector<std::string> out;
        const auto v = get(section, key);
        if (!v)
            return out;
        std::stringstream ss(*v);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            item = trim(item);
            if (!item.empty())
                out.push_back(item);
        }
        return out;
    }

    void KeyValueConfig::reject_unused() const
    {
        const Entry *first = nullptr;
        const std::pair<std::string, std::string> *name = nullptr;
        for (const auto &[k, e] : entries_)
            if (!e.used && (!first || e.line < first->line))
            {
                first = &e;
                name = &k;
            }
        if (first)
            throw ConfigError(source_, first->line, field_name(name->first, name->second), "unknown key");
    }
}
