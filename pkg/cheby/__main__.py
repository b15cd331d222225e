from cheby.commands.cli import main

raise SystemExit(main())
