// Copyright 2026 The tanglekit Authors
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

/* Compiles the public header as C99 and runs one command through it. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "tanglekit/tanglekit.h"

static char* read_file(const char* path) {
  FILE* f = fopen(path, "rb");
  long n;
  char* text;
  if (!f) return NULL;
  fseek(f, 0, SEEK_END);
  n = ftell(f);
  fseek(f, 0, SEEK_SET);
  text = (char*)malloc((size_t)n + 1);
  if (text && fread(text, 1, (size_t)n, f) != (size_t)n) {
    free(text);
    text = NULL;
  }
  if (text) text[n] = '\0';
  fclose(f);
  return text;
}

int main(int argc, char** argv) {
  tk_input* input = NULL;
  tk_family* family = NULL;
  tk_result* result = NULL;
  tk_options options;
  char* text;
  int code;

  if (argc != 2) {
    fprintf(stderr, "usage: %s <edge list>\n", argv[0]);
    return 2;
  }
  text = read_file(argv[1]);
  if (!text) {
    fprintf(stderr, "cannot read %s\n", argv[1]);
    return 2;
  }
  if (tk_input_load(TK_SOURCE_GRAPH, text, &input) != TK_OK) {
    fprintf(stderr, "load failed: %s\n", tk_last_error());
    free(text);
    return 1;
  }
  free(text);
  if (tk_input_oriented(input) != 17 || tk_input_separations(input) != 9) {
    fprintf(stderr, "unexpected P3 sizes\n");
    return 1;
  }
  if (tk_family_load(input, NULL, &family) != TK_OK ||
      tk_family_add_generator(family, "graph-stars") != TK_OK) {
    fprintf(stderr, "family failed: %s\n", tk_last_error());
    return 1;
  }
  tk_options_init(&options);
  options.command = "tangles";
  options.k = "2";
  options.refine = 1;
  if (tk_run(input, family, &options, &result) != TK_OK) {
    fprintf(stderr, "run failed: %s\n", tk_last_error());
    return 1;
  }
  code = tk_result_exit_code(result);
  if (code != 0 || !strstr(tk_result_json(result), "\"count\": 2")) {
    fprintf(stderr, "unexpected result %d: %s\n", code, tk_result_json(result));
    return 1;
  }
  printf("tangles: exit %d\n", code);
  tk_result_free(result);
  tk_family_free(family);
  tk_input_free(input);
  return 0;
}
