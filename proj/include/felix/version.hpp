#pragma once

#define FELIX_VERSION "0.1.0"
