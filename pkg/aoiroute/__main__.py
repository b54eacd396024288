from aoiroute.cli import main

raise SystemExit(main())
